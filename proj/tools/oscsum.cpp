// oscsum: command-line front end for the twisted-sum verification library.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oscsum/csvio.hpp"
#include "oscsum/deltamethod.hpp"
#include "oscsum/errors.hpp"
#include "oscsum/exppair.hpp"
#include "oscsum/forms.hpp"
#include "oscsum/phase.hpp"
#include "oscsum/reduce.hpp"
#include "oscsum/twist.hpp"
#include "oscsum/verify.hpp"
#include "oscsum/voronoi.hpp"

using namespace oscsum;

namespace {

struct Common {
  std::string cache_dir;
  std::string output;
  std::size_t threads = 0;
  std::ofstream file;

  std::ostream& out() {
    if (output.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(output);
      if (!file) throw UsageError("cannot open output file: " + output);
    }
    return file;
  }
};

// The resolved-config echo deliberately omits the thread count: outputs are
// thread-count invariant by design and must diff clean across --threads.
void echo_config(CsvWriter& csv, const std::string& sub,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string line = "config: subcommand=" + sub;
  for (const auto& [k, v] : kv) line += " " + k + "=" + v;
  csv.comment(line);
}

std::vector<int> parse_weights(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw UsageError("empty weight list");
  for (int w : out)
    if (!weight_supported(w)) throw UnsupportedWeight(std::to_string(w));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

PhaseSpec parse_phase(const std::string& kind, double alpha, double beta) {
  if (kind == "log") return PhaseSpec::log_phase(alpha);
  if (kind == "power") return PhaseSpec::power_phase(alpha, beta);
  throw UsageError("phase must be log or power");
}

FourierTable load_form(const Common& c, int w, std::size_t N) {
  if (!c.cache_dir.empty()) return build_eigenform_cached(w, N, c.cache_dir);
  return build_eigenform(w, N);
}

int cmd_coeffs(Common& c, int weight, std::size_t N, std::size_t limit) {
  auto t = load_form(c, weight, N);
  CsvWriter csv(c.out());
  echo_config(csv, "coeffs",
              {{"weight", std::to_string(weight)}, {"N", std::to_string(N)}});
  csv.header({"n", "lambda"});
  std::size_t hi = limit ? std::min(limit, N) : N;
  for (std::size_t n = 1; n <= hi; ++n)
    csv.field((long long)n).field(t[n]).endrow();
  return 0;
}

int cmd_twist(Common& c, const std::string& weights, const std::string& kind,
              double alpha, double beta, double t, double X, double delta) {
  auto ws = parse_weights(weights);
  if (ws.size() != 2) throw UsageError("twist needs exactly two weights");
  PhaseSpec phase = parse_phase(kind, alpha, beta);
  std::size_t N = (std::size_t)(3.0 * X) + 2;
  auto f = load_form(c, ws[0], N);
  auto g = load_form(c, ws[1], N);
  TwistSpec spec = TwistSpec::make(phase, t, X, make_window(1.0, 2.0, delta));
  cdouble S = eval_twist_sum(f, g, spec);
  CsvWriter csv(c.out());
  echo_config(csv, "twist",
              {{"weights", weights},
               {"phase", kind},
               {"alpha", fmt17(alpha)},
               {"beta", fmt17(beta)},
               {"t", fmt17(t)},
               {"X", fmt17(X)},
               {"delta", fmt17(delta)}});
  csv.header({"t", "X", "S_re", "S_im", "Cstar", "in_regime"});
  double cstar = std::abs(S) / (std::pow(t, 0.4) * std::pow(X, 0.75));
  csv.field(t).field(X).field(S).field(cstar)
      .field((long long)(spec.in_regime ? 1 : 0)).endrow();
  return 0;
}

int cmd_harness(Common& c, const std::string& weights, const std::string& kind,
                double alpha, double beta, const std::string& ts_str) {
  auto ws = parse_weights(weights);
  if (ws.size() != 2) throw UsageError("harness needs exactly two weights");
  PhaseSpec phase = parse_phase(kind, alpha, beta);
  std::vector<double> ts = parse_doubles(ts_str);
  std::vector<double> exps;
  for (int k = 1; k <= 5; ++k) exps.push_back(1.6 + 0.8 * k / 6.0);
  double tmax = 0;
  for (double t : ts) tmax = std::max(tmax, t);
  std::size_t N = (std::size_t)(2.0 * std::pow(tmax, exps.back())) + 2;
  auto f = load_form(c, ws[0], N);
  auto g = load_form(c, ws[1], N);
  auto rep = theorem1_harness(f, g, phase, ts, exps);
  CsvWriter csv(c.out());
  echo_config(csv, "harness-thm1",
              {{"weights", weights},
               {"phase", kind},
               {"alpha", fmt17(alpha)},
               {"beta", fmt17(beta)},
               {"ts", ts_str}});
  csv.header({"t", "X", "S_re", "S_im", "Cstar"});
  for (const auto& pt : rep.points)
    csv.field(pt.t).field(pt.X).field(pt.S).field(pt.Cstar).endrow();
  csv.comment("max_Cstar=" + fmt17(rep.max_Cstar) +
              " max_slope=" + fmt17(rep.max_slope) +
              " p90_ratio=" + fmt17(rep.p90_ratio));
  return 0;
}

int cmd_gl5(Common& c, const std::string& Xs_str) {
  auto Xs = parse_doubles(Xs_str);
  double Xmax = 0;
  for (double X : Xs) Xmax = std::max(Xmax, X);
  std::size_t N = (std::size_t)std::max(4.0e6, Xmax + 1);
  auto f = load_form(c, 12, N);
  auto g = load_form(c, 16, N);
  auto rep = gl5_partial_sum_check(f, g, Xs);
  CsvWriter csv(c.out());
  echo_config(csv, "gl5", {{"Xs", Xs_str}});
  csv.header({"X", "E", "E_over_X23"});
  for (std::size_t i = 0; i < rep.X.size(); ++i)
    csv.field(rep.X[i]).field(rep.E[i]).field(rep.normalized[i]).endrow();
  csv.comment("L1=" + fmt17(rep.L1));
  return 0;
}

int cmd_lvalue(Common& c, const std::string& Ts_str, double target) {
  auto Ts = parse_doubles(Ts_str);
  double Tmax = 0;
  for (double T : Ts) Tmax = std::max(Tmax, T);
  std::size_t N = (std::size_t)(25.0 * Tmax) + 2;
  auto f = load_form(c, 12, N);
  auto g = load_form(c, 16, N);
  auto lv = l_value_rankin(f, g, Ts, target);
  CsvWriter csv(c.out());
  echo_config(csv, "lvalue", {{"Ts", Ts_str}, {"target", fmt17(target)}});
  csv.header({"T", "v_exp", "v_gauss"});
  for (std::size_t i = 0; i < lv.T.size(); ++i)
    csv.field(lv.T[i]).field(lv.v_exp[i]).field(lv.v_gauss[i]).endrow();
  csv.comment("value=" + fmt17(lv.value) + " agreement=" + fmt17(lv.agreement) +
              " stability=" + fmt17(lv.stability));
  return 0;
}

int cmd_voronoi(Common& c, int weight, std::uint64_t q, std::uint64_t a,
                double X) {
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  std::size_t N = (std::size_t)(2.3e4 * q * q / X) + 1000;
  auto F = load_form(c, weight, std::max<std::size_t>(N, (std::size_t)(3 * X) + 2));
  VoronoiInstance inst{&F, q, a, X, h};
  auto s = voronoi_sides(inst);
  CsvWriter csv(c.out());
  echo_config(csv, "voronoi-check",
              {{"weight", std::to_string(weight)},
               {"q", std::to_string(q)},
               {"a", std::to_string(a)},
               {"X", fmt17(X)}});
  csv.header({"lhs_re", "lhs_im", "rhs_re", "rhs_im", "defect"});
  csv.field(s.lhs).field(s.rhs).field(s.defect).endrow();
  return s.defect <= 1e-6 ? 0 : 1;
}

int cmd_resonance(Common& c, int weight, std::uint64_t q, double X) {
  SmoothWindow V = make_window(1.0, 2.0, 4.0);
  auto F = load_form(c, weight, (std::size_t)(2.0 * X) + 2);
  auto r = resonance_sum(F, q, X, V);
  CsvWriter csv(c.out());
  echo_config(csv, "resonance",
              {{"weight", std::to_string(weight)},
               {"q", std::to_string(q)},
               {"X", fmt17(X)}});
  csv.header({"sum_re", "sum_im", "main_re", "main_im", "residual",
              "residual_norm"});
  csv.field(r.sum).field(r.main_term).field(r.residual)
      .field(r.residual_norm).endrow();
  return 0;
}

int cmd_delta(Common& c, double Q, int shape, long long nmax) {
  DeltaScheme s = DeltaScheme::make(Q, shape);
  CsvWriter csv(c.out());
  echo_config(csv, "delta-check",
              {{"Q", fmt17(Q)},
               {"shape", std::to_string(shape)},
               {"nmax", std::to_string(nmax)}});
  csv.header({"n", "delta", "defect"});
  double worst = 0;
  for (long long n = -nmax; n <= nmax; ++n) {
    double v = dfi_delta(n, s);
    double d = std::abs(v - (n == 0 ? 1.0 : 0.0));
    worst = std::max(worst, d);
    csv.field(n).field(v).field(d).endrow();
  }
  csv.comment("max_defect=" + fmt17(worst) +
              " integral_defect=" + fmt17(s.integral_defect()));
  return worst <= 1e-7 ? 0 : 1;
}

int cmd_phase(Common& c, double t) {
  PhaseContext ctx;
  ctx.phase = PhaseSpec::log_phase(1.0);
  ctx.t = t;
  ctx.q = 1;
  ctx.X = t * t;
  ctx.m = 1.0;
  ctx.n = 0.0025;
  ctx.V = make_window(0.8, 1.4, 8.0);
  cdouble Iq = eval_I_frak_quad(ctx, 1e-12);
  cdouble Is = eval_I_star(ctx);
  double u0 = ctx.y_center();
  double carrier = ctx.t * ctx.phase.phi(u0 * u0) - ctx.D() * u0;
  double recon = std::abs(e_of(carrier) * Is - Iq);
  CsvWriter csv(c.out());
  echo_config(csv, "phase-check", {{"t", fmt17(t)}});
  csv.header({"metric", "value"});
  csv.field(std::string("I_quad_abs")).field(std::abs(Iq)).endrow();
  csv.field(std::string("I_star_abs")).field(std::abs(Is)).endrow();
  csv.field(std::string("recon_defect")).field(recon).endrow();
  csv.field(std::string("bound")).field(20.0 * std::pow(t, -1.5)).endrow();
  return recon <= 20.0 * std::pow(t, -1.5) ? 0 : 1;
}

int cmd_exppair(Common& c, int depth) {
  auto pairs = generate(depth, {trivial_pair(), bourgain_pair()});
  Objective obj = remark_objective();
  CsvWriter csv(c.out());
  echo_config(csv, "exppair", {{"depth", std::to_string(depth)}});
  csv.header({"p", "q", "objective", "derivation"});
  for (const auto& e : pairs)
    csv.field(e.p.str()).field(e.q.str()).field(obj.eval(e).str())
        .field(e.derivation).endrow();
  auto best = optimize(obj, pairs);
  csv.comment("best=" + best.best.p.str() + "," + best.best.q.str() +
              " value=" + best.value.str() +
              " balance_delta=" + balance_delta().str());
  return 0;
}

int cmd_verify(Common& c, const std::string& level, int first, int last) {
  VerifyEnv env;
  env.cache_dir = c.cache_dir;
  CsvWriter csv(c.out());
  echo_config(csv, "verify-all",
              {{"level", level},
               {"criteria", std::to_string(first) + "-" + std::to_string(last)}});
  csv.header({"criterion", "metric", "value"});
  std::vector<CriterionResult> res;
  if (level == "fast") {
    res = run_fast_checks(env, csv);
  } else if (level == "full") {
    res = run_criteria(env, first, last, csv);
  } else {
    throw UsageError("verify-all level must be fast or full");
  }
  int rc = 0;
  for (const auto& r : res) {
    if (!r.pass) {
      std::cerr << "FAIL criterion " << r.id << " (" << r.name
                << "): " << r.detail << "\n";
      rc = 1;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscsum: twisted coefficient-sum verification toolkit"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("OSCSUM_CACHE_DIR")) common.cache_dir = env;
  app.add_option("--cache-dir", common.cache_dir,
                 "coefficient cache directory (env OSCSUM_CACHE_DIR)");
  app.add_option("--output", common.output, "output CSV path (default stdout)");
  app.add_option("--threads", common.threads, "worker threads (0 = hardware)");

  int weight = 12;
  std::size_t N = 100000, limit = 0;
  auto* sc_coeffs = app.add_subcommand("coeffs", "eigenform coefficients");
  sc_coeffs->add_option("--weight", weight)->required();
  sc_coeffs->add_option("--N", N)->required();
  sc_coeffs->add_option("--limit", limit, "print only the first L rows");

  std::string weights = "12,16", phase_kind = "log";
  double alpha = 1.0, beta = 0.4, tval = 64.0, Xval = 4096.0, delta = 4.0;
  auto* sc_twist = app.add_subcommand("twist", "one twisted sum");
  sc_twist->add_option("--weights", weights);
  sc_twist->add_option("--phase", phase_kind);
  sc_twist->add_option("--alpha", alpha);
  sc_twist->add_option("--beta", beta);
  sc_twist->add_option("--t", tval)->required();
  sc_twist->add_option("--X", Xval)->required();
  sc_twist->add_option("--delta", delta);

  std::string ts_str = "64,128,256,512";
  auto* sc_harness = app.add_subcommand("harness-thm1", "bound harness");
  sc_harness->add_option("--weights", weights);
  sc_harness->add_option("--phase", phase_kind);
  sc_harness->add_option("--alpha", alpha);
  sc_harness->add_option("--beta", beta);
  sc_harness->add_option("--ts", ts_str);

  std::string Xs_str = "1e5,4e5,1.6e6";
  auto* sc_gl5 = app.add_subcommand("gl5", "degree-5 partial sums");
  sc_gl5->add_option("--Xs", Xs_str);

  std::string Ts_str = "1e4,4e4,1.6e5";
  double target = 1e-4;
  auto* sc_lvalue = app.add_subcommand("lvalue", "L(1, f x g) estimator");
  sc_lvalue->add_option("--Ts", Ts_str);
  sc_lvalue->add_option("--target", target);

  std::uint64_t qmod = 1, ares = 0;
  auto* sc_vor = app.add_subcommand("voronoi-check", "voronoi identity");
  sc_vor->add_option("--weight", weight);
  sc_vor->add_option("--q", qmod)->required();
  sc_vor->add_option("--a", ares);
  sc_vor->add_option("--X", Xval)->required();

  auto* sc_res = app.add_subcommand("resonance", "resonance sum");
  sc_res->add_option("--weight", weight);
  sc_res->add_option("--q", qmod)->required();
  sc_res->add_option("--X", Xval)->required();

  double Qval = 30.0;
  int shape = 0;
  long long nmax = 20;
  auto* sc_delta = app.add_subcommand("delta-check", "delta-method identity");
  sc_delta->add_option("--Q", Qval);
  sc_delta->add_option("--shape", shape);
  sc_delta->add_option("--nmax", nmax);

  double phase_t = 1e4;
  auto* sc_phase = app.add_subcommand("phase-check", "stationary evaluation");
  sc_phase->add_option("--t", phase_t);

  int depth = 6;
  auto* sc_exp = app.add_subcommand("exppair", "exponent pair calculus");
  sc_exp->add_option("--depth", depth);

  std::string level = "fast";
  int cfirst = 1, clast = 13;
  auto* sc_verify = app.add_subcommand("verify-all", "acceptance suites");
  sc_verify->add_option("level", level, "fast or full");
  sc_verify->add_option("--first", cfirst);
  sc_verify->add_option("--last", clast);

  // global flags (--threads, --cache-dir, --output) may follow the subcommand
  for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  set_thread_count(common.threads);
  try {
    if (*sc_coeffs) return cmd_coeffs(common, weight, N, limit);
    if (*sc_twist)
      return cmd_twist(common, weights, phase_kind, alpha, beta, tval, Xval,
                       delta);
    if (*sc_harness)
      return cmd_harness(common, weights, phase_kind, alpha, beta, ts_str);
    if (*sc_gl5) return cmd_gl5(common, Xs_str);
    if (*sc_lvalue) return cmd_lvalue(common, Ts_str, target);
    if (*sc_vor) return cmd_voronoi(common, weight, qmod, ares, Xval);
    if (*sc_res) return cmd_resonance(common, weight, qmod, Xval);
    if (*sc_delta) return cmd_delta(common, Qval, shape, nmax);
    if (*sc_phase) return cmd_phase(common, phase_t);
    if (*sc_exp) return cmd_exppair(common, depth);
    if (*sc_verify) return cmd_verify(common, level, cfirst, clast);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
