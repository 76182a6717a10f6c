// Acceptance harness: runs the full verification suite through the CLI at two
// thread counts, byte-compares the outputs (criterion 13), and prints one
// PASS/FAIL line per criterion parsed from the suite's own CSV.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const char* kNames[14] = {"",
                          "hecke coefficients",
                          "voronoi identity",
                          "asymptotic error order",
                          "resonance formula",
                          "delta-method identity",
                          "stationary-phase lemmas",
                          "integral suite",
                          "twist-bound harness",
                          "dirichlet sup bound",
                          "degree-5 partial sums",
                          "exponent-pair optimum",
                          "gamma-factor asymptotics",
                          "determinism"};

int run(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const std::string bin = OSCSUM_BIN;
  const fs::path dir = fs::path(OSCSUM_TEST_DIR) / "acceptance";
  const fs::path cache = OSCSUM_CACHE;
  fs::create_directories(dir);
  fs::create_directories(cache);

  const fs::path out1 = dir / "full_t1.csv", out8 = dir / "full_t8.csv";
  const std::string common =
      bin + " --cache-dir " + cache.string() + " verify-all full ";
  std::cerr << "acceptance: running verify-all full --threads 8\n";
  int rc8 = run(common + "--threads 8 --output " + out8.string() + " 2> " +
                (dir / "t8.err").string());
  std::cerr << "acceptance: running verify-all full --threads 1\n";
  int rc1 = run(common + "--threads 1 --output " + out1.string() + " 2> " +
                (dir / "t1.err").string());

  // parse "<id>,pass,<0|1>" rows from the 8-thread run
  std::map<int, bool> crit;
  std::istringstream in(slurp(out8));
  std::string line;
  while (std::getline(in, line)) {
    auto c1 = line.find(",pass,");
    if (c1 == std::string::npos || line.empty() || line[0] == '#') continue;
    int id = std::atoi(line.c_str());
    if (id >= 1 && id <= 13) crit[id] = line.substr(c1 + 6) == "1";
  }

  bool all = true;
  for (int id = 1; id <= 12; ++id) {
    bool ok = crit.count(id) && crit[id];
    all = all && ok;
    std::cout << "criterion " << id << " (" << kNames[id] << "): "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  // criterion 13: the two full runs must agree byte for byte, exit cleanly,
  // and the suite's internal reduction check must also have passed
  std::string b1 = slurp(out1), b8 = slurp(out8);
  bool ok13 = rc1 == 0 && rc8 == 0 && !b1.empty() && b1 == b8 &&
              crit.count(13) && crit[13];
  all = all && ok13;
  std::cout << "criterion 13 (" << kNames[13] << "): "
            << (ok13 ? "PASS" : "FAIL") << "\n";
  if (!ok13)
    std::cerr << "acceptance: rc1=" << rc1 << " rc8=" << rc8
              << " bytes1=" << b1.size() << " bytes8=" << b8.size() << "\n";
  return all ? 0 : 1;
}
