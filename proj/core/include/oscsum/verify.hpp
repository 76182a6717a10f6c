#pragma once
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "oscsum/csvio.hpp"
#include "oscsum/forms.hpp"

namespace oscsum {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // short "key=value" summary for failure reporting
};

// Shared tables across criteria, built lazily (and cached on disk when a
// cache directory is set).
struct VerifyEnv {
  std::string cache_dir;

  // all six supported weights at N = 1e6
  std::map<int, FourierTable> small;
  // weights 12 and 16 at N = 2^22 for the large harnesses
  std::map<int, FourierTable> big;

  void ensure_small();
  void ensure_big();
  const FourierTable& small_form(int weight);
  const FourierTable& big_form(int weight);
};

// Runs acceptance criteria `first..last` (1-based, inclusive; 13 total).
// Deterministic metric rows go to `csv`; progress/timing go to stderr.
std::vector<CriterionResult> run_criteria(VerifyEnv& env, int first, int last,
                                          CsvWriter& csv);

// Small-scale smoke suite (the `verify-all fast` level, <= 60 s).
std::vector<CriterionResult> run_fast_checks(VerifyEnv& env, CsvWriter& csv);

}  // namespace oscsum
