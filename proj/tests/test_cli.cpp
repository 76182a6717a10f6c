#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kBin = OSCSUM_BIN;
const fs::path kDir = fs::path(OSCSUM_TEST_DIR) / "cli";

int run(const std::string& args, const std::string& out_file) {
  fs::create_directories(kDir);
  std::string cmd = kBin + " " + args + " > " + (kDir / out_file).string() +
                    " 2> " + (kDir / (out_file + ".err")).string();
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& out_file) {
  std::ifstream in(kDir / out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("", "noargs.csv") == 2);
  CHECK(run("--no-such-flag", "badflag.csv") == 2);
  CHECK(run("exppair --no-such-flag", "badsub.csv") == 2);
  CHECK(run("verify-all nonsense", "badlevel.csv") == 2);
  CHECK(run("twist --t 5", "missingx.csv") == 2);  // --X is required
}

TEST_CASE("help exits 0") {
  CHECK(run("--help", "help.txt") == 0);
  CHECK(slurp("help.txt").find("exppair") != std::string::npos);
}

TEST_CASE("exppair subcommand output") {
  CHECK(run("exppair --depth 4", "exppair.csv") == 0);
  std::string out = slurp("exppair.csv");
  CHECK(out.find("# config: subcommand=exppair depth=4") != std::string::npos);
  CHECK(out.find("p,q,objective,derivation") != std::string::npos);
  CHECK(out.find("13/84,55/84") != std::string::npos);
  CHECK(out.find("best=13/194,76/97") != std::string::npos);
  CHECK(out.find("balance_delta=1/356") != std::string::npos);
}

TEST_CASE("delta-check passes at the documented scale") {
  CHECK(run("delta-check --Q 14 --nmax 4", "delta.csv") == 0);
  std::string out = slurp("delta.csv");
  CHECK(out.find("# config: subcommand=delta-check") != std::string::npos);
  CHECK(out.find("max_defect=") != std::string::npos);
}

TEST_CASE("coeffs round-trips through the cache directory") {
  fs::path cache = kDir / "cache";
  fs::create_directories(cache);
  std::string common = "--cache-dir " + cache.string() + " ";
  CHECK(run(common + "coeffs --weight 12 --N 1000 --limit 10",
            "coeffs.csv") == 0);
  std::string out = slurp("coeffs.csv");
  CHECK(out.find("n,lambda") != std::string::npos);
  // lambda(2) = -24 / 2^5.5
  CHECK(out.find("-0.530330085889910") != std::string::npos);
  // second run must hit the cache and produce identical bytes
  CHECK(run(common + "coeffs --weight 12 --N 1000 --limit 10",
            "coeffs2.csv") == 0);
  CHECK(slurp("coeffs.csv") == slurp("coeffs2.csv"));
  CHECK(!fs::is_empty(cache));
}

TEST_CASE("twist output is identical across thread counts") {
  CHECK(run("twist --t 40 --X 1000 --threads 1", "t1.csv") == 0);
  CHECK(run("twist --t 40 --X 1000 --threads 8", "t8.csv") == 0);
  CHECK(slurp("t1.csv") == slurp("t8.csv"));
  CHECK(slurp("t1.csv").find("S_re") != std::string::npos);
}

TEST_CASE("verify-all fast smoke suite passes") {
  fs::path cache = kDir / "cache";
  fs::create_directories(cache);
  CHECK(run("--cache-dir " + cache.string() + " verify-all fast",
            "fast.csv") == 0);
  std::string out = slurp("fast.csv");
  CHECK(out.find("criterion,metric,value") != std::string::npos);
  CHECK(out.find(",pass,1") != std::string::npos);
  CHECK(out.find(",pass,0") == std::string::npos);
}
