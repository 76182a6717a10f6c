#pragma once
#include <stdexcept>
#include <string>

namespace oscsum {

// One exception type per documented failure mode so callers (and tests) can
// distinguish them without string matching.
#define OSCSUM_ERROR(Name)                                        \
  struct Name : std::runtime_error {                              \
    explicit Name(const std::string& msg) : std::runtime_error(#Name ": " + msg) {} \
  }

OSCSUM_ERROR(NonInvertible);
OSCSUM_ERROR(UnsupportedWeight);
OSCSUM_ERROR(RangeExceeded);
OSCSUM_ERROR(DegenerateSupport);
OSCSUM_ERROR(BudgetExceeded);
OSCSUM_ERROR(Pole);
OSCSUM_ERROR(NoStationaryPoint);
OSCSUM_ERROR(MultipleStationaryPoints);
OSCSUM_ERROR(RegimeViolated);
OSCSUM_ERROR(NotConverged);
OSCSUM_ERROR(DenominatorVanishes);
OSCSUM_ERROR(HypothesisViolated);
OSCSUM_ERROR(StationaryOutsideSupport);
OSCSUM_ERROR(UsageError);

#undef OSCSUM_ERROR

}  // namespace oscsum
