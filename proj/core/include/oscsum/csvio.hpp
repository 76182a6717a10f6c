#pragma once
#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace oscsum {

// Fixed 17-significant-digit decimal; double -> text -> double is exact.
std::string fmt17(double v);

// Minimal CSV emitter: comment lines, a header row, then value rows.  All
// doubles go through fmt17 so outputs diff cleanly across runs.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void comment(const std::string& line);
  void header(const std::vector<std::string>& cols);

  CsvWriter& field(const std::string& s);
  CsvWriter& field(double v);
  CsvWriter& field(std::complex<double> v);  // two columns: re, im
  CsvWriter& field(long long v);
  void endrow();

 private:
  std::ostream& os_;
  bool row_open_ = false;
};

}  // namespace oscsum
