#include "oscsum/csvio.hpp"

#include <cstdio>

namespace oscsum {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::comment(const std::string& line) {
  os_ << "# " << line << "\n";
}

void CsvWriter::header(const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    os_ << (i ? "," : "") << cols[i];
  os_ << "\n";
}

CsvWriter& CsvWriter::field(const std::string& s) {
  if (row_open_) os_ << ",";
  os_ << s;
  row_open_ = true;
  return *this;
}

CsvWriter& CsvWriter::field(double v) { return field(fmt17(v)); }

CsvWriter& CsvWriter::field(std::complex<double> v) {
  field(v.real());
  return field(v.imag());
}

CsvWriter& CsvWriter::field(long long v) {
  return field(std::to_string(v));
}

void CsvWriter::endrow() {
  os_ << "\n";
  row_open_ = false;
}

}  // namespace oscsum
