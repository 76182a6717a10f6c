#include "oscsum/verify.hpp"

#include <chrono>
#include <filesystem>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <numeric>
#include <sstream>

#include "oscsum/arith.hpp"
#include "oscsum/deltamethod.hpp"
#include "oscsum/errors.hpp"
#include "oscsum/exppair.hpp"
#include "oscsum/phase.hpp"
#include "oscsum/quad.hpp"
#include "oscsum/reduce.hpp"
#include "oscsum/twist.hpp"
#include "oscsum/voronoi.hpp"

namespace oscsum {

namespace {

// calibrated desk-scale constants: measured once on the reference grids and
// pinned; the criteria assert against these fixed values
// Calibrated once against a measurement run and reused verbatim; each value
// leaves roughly 2x headroom over the largest observation on the pinned grid
// (measured maxima: 1.91, 0.33, 1.32, 0.016, 5.1e-4, 0.0098 respectively).
constexpr double kResNormCal = 4.0;     // resonance residual / (qX)^{1/4}
constexpr double kHTimesTCal = 1.0;     // |H| * t over the x grid
constexpr double kHXTimesTCal = 3.0;    // |H(x)| sqrt(x) t on x in {1,..,64}
constexpr double kCstarCal = 0.05;      // theorem-1 harness max C*
constexpr double kDirichletCal = 1e-3;  // sup |D|/sqrt(N) vs t^0.9 log^2 t
constexpr double kGl5NormCal = 0.02;    // E(X)/X^{2/3}

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Timer {
  const char* label;
  double t0 = 0;
  explicit Timer(const char* l) : label(l), t0(now_s()) {}
  ~Timer() { std::cerr << "[timing] " << label << ": " << now_s() - t0 << " s\n"; }
};

double lsq_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  double n = (double)lx.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void emit(CsvWriter& csv, int id, const std::string& key, double v) {
  csv.field((long long)id).field(key).field(v).endrow();
}

CriterionResult finish(CsvWriter& csv, int id, const std::string& name,
                       bool pass, const std::string& detail) {
  csv.field((long long)id).field("pass").field((long long)(pass ? 1 : 0))
      .endrow();
  return {id, name, pass, detail};
}

// Independent small-degree oracle for the Delta coefficients: naive integer
// expansion of q * prod_{n<=deg} (1 - q^n)^24.
std::vector<long long> delta_oracle(int deg) {
  std::vector<long long> p(deg + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= deg; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = deg; i >= n; --i) p[i] -= p[i - n];
    }
  }
  std::vector<long long> a(deg + 2, 0);
  for (int i = 0; i <= deg; ++i) a[i + 1] = p[i];  // shift by q
  return a;
}

// --------------------------------------------------------------- criterion 1
CriterionResult crit1(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 1");
  auto oracle = delta_oracle(8);
  env.ensure_small();
  const FourierTable& d = env.small_form(12);
  double worst_oracle = 0;
  for (int n : {2, 3, 5}) {
    double a = d[n] * std::pow((double)n, 5.5);
    worst_oracle = std::max(worst_oracle,
                            std::abs(a - (double)oracle[n]) /
                                std::abs((double)oracle[n]));
    emit(csv, 1, "a" + std::to_string(n), std::round(a));
  }
  emit(csv, 1, "oracle_rel_defect", worst_oracle);
  bool pass = worst_oracle <= 1e-10;
  double worst_hecke = 0;
  for (int w : kSupportedWeights) {
    auto rep = verify_hecke(env.small_form(w), 1e-10);
    double m = std::max({rep.max_mult_defect, rep.max_hecke_defect,
                         rep.max_deligne_excess});
    emit(csv, 1, "hecke_w" + std::to_string(w), m);
    worst_hecke = std::max(worst_hecke, m);
    pass = pass && rep.pass(1e-10);
  }
  return finish(csv, 1, "hecke coefficients", pass,
                "oracle=" + fmt17(worst_oracle) +
                    " hecke=" + fmt17(worst_hecke));
}

// --------------------------------------------------------------- criterion 2
CriterionResult crit2(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 2");
  env.ensure_small();
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  double worst = 0;
  for (int w : {12, 16}) {
    const FourierTable& F = env.small_form(w);
    for (double X : {25.0, 50.0, 100.0}) {
      for (std::uint64_t q = 1; q <= 8; ++q) {
        PhiCache pc = build_phi_cache(F, q, X, h, 1e-11);
        double worst_q = 0;
        for (std::uint64_t a = 0; a < std::max<std::uint64_t>(q, 1); ++a) {
          if (q > 1 && (a == 0 || std::gcd(a, q) != 1)) continue;
          VoronoiInstance inst{&F, q, a, X, h};
          auto s = voronoi_sides(inst, &pc);
          worst_q = std::max(worst_q, s.defect);
        }
        worst = std::max(worst, worst_q);
        emit(csv, 2,
             "defect_w" + std::to_string(w) + "_X" +
                 std::to_string((int)X) + "_q" + std::to_string((int)q),
             worst_q);
      }
    }
  }
  emit(csv, 2, "max_defect", worst);
  return finish(csv, 2, "voronoi identity", worst <= 1e-6,
                "max_defect=" + fmt17(worst));
}

// --------------------------------------------------------------- criterion 3
CriterionResult crit3(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 3");
  SmoothWindow h = make_window(1.0, 2.0, 8.0);
  const int kappa = 12;
  std::vector<double> xs;
  for (int i = 0; i <= 6; ++i) xs.push_back(100.0 * std::pow(100.0, i / 6.0));
  bool pass = true;
  std::string det;
  for (int J : {0, 1, 2}) {
    std::vector<double> lx, ly;
    for (double x : xs) {
      cdouble ex = phi_h_exact(x, h, kappa, 5e-14);
      cdouble as = phi_h_asymptotic(x, h, kappa, J, 1e-13);
      double d = std::abs(ex - as);
      lx.push_back(std::log(x));
      ly.push_back(std::log(std::max(d, 1e-300)));
      emit(csv, 3, "defect_J" + std::to_string(J) + "_x" + fmt17(x), d);
    }
    double slope = lsq_slope(lx, ly);
    double need = -(J / 2.0 + 0.75) + 0.1;
    emit(csv, 3, "slope_J" + std::to_string(J), slope);
    pass = pass && slope <= need;
    det += "J" + std::to_string(J) + "=" + fmt17(slope) + " ";
  }
  return finish(csv, 3, "asymptotic error order", pass, det);
}

// --------------------------------------------------------------- criterion 4
CriterionResult crit4(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 4");
  env.ensure_big();
  const FourierTable& F = env.big_form(12);
  SmoothWindow V = make_window(1.0, 2.0, 4.0);
  bool pass = true;
  double worst_norm = 0, worst_ratio = 0;
  for (std::uint64_t q : {1, 2, 3}) {
    double prev = -1.0;
    for (double X : {1e4, 4e4, 1.6e5}) {
      auto r = resonance_sum(F, q, X, V);
      emit(csv, 4, "resnorm_q" + std::to_string((int)q) + "_X" + fmt17(X),
           r.residual_norm);
      worst_norm = std::max(worst_norm, r.residual_norm);
      if (prev > 0.0) {
        double ratio = r.residual_norm / prev;
        worst_ratio = std::max(worst_ratio, ratio);
        pass = pass && ratio <= 1.6;
      }
      prev = r.residual_norm;
    }
  }
  emit(csv, 4, "max_residual_norm", worst_norm);
  emit(csv, 4, "max_ratio", worst_ratio);
  pass = pass && worst_norm <= kResNormCal;
  return finish(csv, 4, "resonance formula", pass,
                "norm=" + fmt17(worst_norm) + " ratio=" + fmt17(worst_ratio));
}

// --------------------------------------------------------------- criterion 5
CriterionResult crit5(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 5");
  DeltaScheme s0 = DeltaScheme::make(30.0, 0);
  DeltaScheme s1 = DeltaScheme::make(30.0, 1);
  double worst = 0, cross = 0;
  for (long long n = -20; n <= 20; ++n) {
    double v0 = dfi_delta(n, s0);
    double v1 = dfi_delta(n, s1);
    double target = n == 0 ? 1.0 : 0.0;
    worst = std::max({worst, std::abs(v0 - target), std::abs(v1 - target)});
    cross = std::max(cross, std::abs(v0 - v1));
  }
  emit(csv, 5, "max_identity_defect", worst);
  emit(csv, 5, "max_cross_window", cross);
  emit(csv, 5, "integral_defect_shape0", s0.integral_defect());
  bool pass = worst <= 1e-7 && cross <= 2e-7;
  return finish(csv, 5, "delta-method identity", pass,
                "defect=" + fmt17(worst) + " cross=" + fmt17(cross));
}

// --------------------------------------------------------------- criterion 6
CriterionResult crit6(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 6");
  SmoothWindow w = make_window(1.0, 2.0, 8.0);
  bool pass = true;
  // leading-term defect ~ 1/H
  std::vector<double> lH, lD;
  for (double H : {1e3, 1e4, 1e5}) {
    auto rep = stationary_leading_term(
        w,
        [H](double y) {
          double u = y - 1.5;
          return H * (u * u + u * u * u);
        },
        [H](double y) {
          double u = y - 1.5;
          return H * (2.0 * u + 3.0 * u * u);
        },
        [H](double y) { return H * (2.0 + 6.0 * (y - 1.5)); });
    lH.push_back(std::log(H));
    lD.push_back(std::log(rep.rel_defect));
    emit(csv, 6, "lead_defect_H" + fmt17(H), rep.rel_defect);
  }
  double slope = lsq_slope(lH, lD);
  emit(csv, 6, "lead_defect_slope", slope);
  pass = pass && std::abs(slope + 1.0) <= 0.15;
  // van der Corput second-derivative bound, constant 8
  for (double H : {1e3, 1e4, 1e5}) {
    auto rep = second_derivative_bound_check(
        w, [H](double y) { return H * (y - 1.5) * (y - 1.5); },
        [H](double y) { return 2.0 * H * (y - 1.5); },
        [H](double) { return 2.0 * H; }, 2.0 * H);
    emit(csv, 6, "vdc_margin_H" + fmt17(H), rep.integral_abs / rep.bound);
    pass = pass && rep.pass;
  }
  // first-derivative decay beats R^-3
  SmoothWindow w4 = make_window(1.0, 2.0, 4.0);
  std::vector<double> lR, lI;
  for (double R : {1e2, 1e3, 1e4}) {
    NonStatParams prm;
    prm.Q = 1.0;
    prm.U = 0.25;
    prm.Y = 0.0;
    prm.Z = 1.0;
    prm.R = R;
    auto rep = nonstationary_decay_check(
        w4, [R](double y) { return R * y; }, [R](double) { return R; }, prm,
        3);
    lR.push_back(std::log(R));
    lI.push_back(std::log(std::max(rep.integral_abs, 1e-300)));
    emit(csv, 6, "nonstat_I_R" + fmt17(R), rep.integral_abs);
    pass = pass && rep.pass;
  }
  double rslope = lsq_slope(lR, lI);
  emit(csv, 6, "nonstat_slope", rslope);
  pass = pass && rslope <= -3.0;
  return finish(csv, 6, "stationary-phase lemmas", pass,
                "lead_slope=" + fmt17(slope) + " nonstat=" + fmt17(rslope));
}

// --------------------------------------------------------------- criterion 7
CriterionResult crit7(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 7");
  PhaseContext ctx;
  ctx.phase = PhaseSpec::log_phase(1.0);
  ctx.t = 1e4;
  ctx.q = 1;
  ctx.X = ctx.t * ctx.t;
  ctx.m = 1.0;       // D = 2t
  ctx.n = 0.0025;    // B = 0.1 t
  ctx.V = make_window(0.8, 1.4, 8.0);
  cdouble Iq = eval_I_frak_quad(ctx, 1e-12);
  cdouble Is = eval_I_star(ctx);
  double u0 = ctx.y_center();
  double carrier = ctx.t * ctx.phase.phi(u0 * u0) - ctx.D() * u0;
  double recon = std::abs(e_of(carrier) * Is - Iq);
  emit(csv, 7, "istar_recon_defect", recon);
  bool pass = recon <= 20.0 * std::pow(ctx.t, -1.5);
  // second-order phase model at small B/D
  PhaseContext cp = ctx;
  cp.n = 1e-4;  // B/D = 0.01
  double pd = i_star_phase_defect(cp);
  double cubic = std::pow(0.01, 3) * 2.0 * ctx.t / 3.0;
  emit(csv, 7, "istar_phase_defect", pd);
  pass = pass && pd <= 2.0 * cubic;
  // H-kernel bounds
  HContext hc;
  hc.base = ctx;
  hc.base.V = make_window(0.5, 4.0, 4.0);
  hc.M = 1.0;
  hc.n1 = 0.0025;
  hc.n2 = 0.0026;
  hc.omega = make_window(2.0 / 3.0, 3.0, 4.0);
  double worst_ht = 0;
  for (double x : {0.0, 1.0, 4.0, 16.0, 64.0}) {
    double a = std::abs(eval_H(x, hc, 1e-10));
    emit(csv, 7, "H_x" + fmt17(x), a);
    worst_ht = std::max(worst_ht, a * ctx.t);
    if (x > 0.0) pass = pass && a * std::sqrt(x) * ctx.t <= kHXTimesTCal;
  }
  emit(csv, 7, "max_H_times_t", worst_ht);
  pass = pass && worst_ht <= kHTimesTCal;
  double far = std::abs(eval_H(300.0, hc, 1e-10));
  emit(csv, 7, "H_superdecay", far);
  pass = pass && far <= 1e-8;
  return finish(csv, 7, "integral suite", pass,
                "recon=" + fmt17(recon) + " Ht=" + fmt17(worst_ht) +
                    " far=" + fmt17(far));
}

// --------------------------------------------------------------- criterion 8
CriterionResult crit8(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 8");
  env.ensure_big();
  const FourierTable& f = env.big_form(12);
  const FourierTable& g = env.big_form(16);
  std::vector<double> ts = {64, 128, 256, 512};
  std::vector<double> exps;
  for (int k = 1; k <= 5; ++k) exps.push_back(1.6 + 0.8 * k / 6.0);
  bool pass = true;
  std::string det;
  for (auto [name, phase] :
       {std::pair<const char*, PhaseSpec>{"log", PhaseSpec::log_phase(1.0)},
        {"pow25", PhaseSpec::power_phase(1.0, 0.4)}}) {
    auto rep = theorem1_harness(f, g, phase, ts, exps);
    for (const auto& pt : rep.points)
      emit(csv, 8,
           std::string("Cstar_") + name + "_t" + fmt17(pt.t) + "_X" +
               fmt17(pt.X),
           pt.Cstar);
    emit(csv, 8, std::string("maxC_") + name, rep.max_Cstar);
    emit(csv, 8, std::string("p90_") + name, rep.p90_ratio);
    pass = pass && std::isfinite(rep.max_Cstar) &&
           rep.max_Cstar <= kCstarCal &&
           rep.p90_ratio <= std::pow(2.0, 0.05);
    det += std::string(name) + ":C=" + fmt17(rep.max_Cstar) +
           ",p90=" + fmt17(rep.p90_ratio) + " ";
  }
  return finish(csv, 8, "twist-bound harness", pass, det);
}

// --------------------------------------------------------------- criterion 9
CriterionResult crit9(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 9");
  env.ensure_big();
  const FourierTable& f = env.big_form(12);
  const FourierTable& g = env.big_form(16);
  bool pass = true;
  std::string det;
  for (double t : {128.0, 256.0}) {
    auto rep = dirichlet_sup(f, g, t);
    double bound = kDirichletCal * std::pow(t, 0.9) * std::log(t) * std::log(t);
    emit(csv, 9, "sup_t" + fmt17(t), rep.sup_norm);
    emit(csv, 9, "bound_t" + fmt17(t), bound);
    pass = pass && rep.sup_norm <= bound;
    det += "t" + fmt17(t) + "=" + fmt17(rep.sup_norm) + "/" + fmt17(bound) +
           " ";
  }
  return finish(csv, 9, "dirichlet polynomial sup", pass, det);
}

// -------------------------------------------------------------- criterion 10
CriterionResult crit10(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 10");
  env.ensure_big();
  const FourierTable& f = env.big_form(12);
  const FourierTable& g = env.big_form(16);
  auto lv = l_value_rankin(f, g, {1e4, 4e4, 1.6e5}, 1e-4);
  emit(csv, 10, "L1", lv.value);
  emit(csv, 10, "L1_agreement", lv.agreement);
  emit(csv, 10, "L1_stability", lv.stability);
  bool pass = lv.agreement <= 1e-4;
  auto l5 = convolve_gl5(f, g, 1600001);
  auto rep = gl5_partial_sum_check(l5, {1e5, 4e5, 1.6e6}, lv.value);
  for (std::size_t i = 0; i < rep.X.size(); ++i)
    emit(csv, 10, "E_norm_X" + fmt17(rep.X[i]), rep.normalized[i]);
  pass = pass && rep.max_normalized <= kGl5NormCal && !rep.monotone_growth;
  return finish(csv, 10, "gl5 partial sums", pass,
                "L1=" + fmt17(lv.value) + " agree=" + fmt17(lv.agreement) +
                    " maxnorm=" + fmt17(rep.max_normalized));
}

// -------------------------------------------------------------- criterion 11
CriterionResult crit11(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 11");
  auto ab = a_process(bourgain_pair());
  bool pass = ab.p == Rational(13, 194) && ab.q == Rational(76, 97);
  pass = pass && balance_delta() == Rational(1, 356);
  auto pairs = generate(6, {trivial_pair(), bourgain_pair()});
  auto best = optimize(remark_objective(), pairs);
  pass = pass && best.best.p == Rational(13, 194) &&
         best.best.q == Rational(76, 97);
  auto pairs8 = generate(8, {trivial_pair(), bourgain_pair()});
  auto best8 = optimize(remark_objective(), pairs8);
  pass = pass && best8.value == best.value;
  emit(csv, 11, "closure_size_d6", (double)pairs.size());
  csv.field(11LL).field("best_pair").field(best.best.p.str() + ";" +
                                           best.best.q.str()).endrow();
  csv.field(11LL).field("best_value").field(best.value.str()).endrow();
  return finish(csv, 11, "exponent pairs", pass,
                best.best.p.str() + "," + best.best.q.str() + " val=" +
                    best.value.str());
}

// -------------------------------------------------------------- criterion 12
CriterionResult crit12(VerifyEnv&, CsvWriter& csv) {
  Timer tm("criterion 12");
  GammaFactor gf = GammaFactor::make(16, 12);
  bool pass = true;
  std::string det;
  for (double t : {50.0, 100.0, 200.0}) {
    cdouble v = gamma_factor(cdouble{1.0, -t}, gf);
    double ratio = std::abs(v) / std::pow(t / (2.0 * M_PI), 2.5);
    emit(csv, 12, "stirling_ratio_t" + fmt17(t), ratio);
    pass = pass && std::abs(ratio - 1.0) <= 5.0 / t;
    det += "t" + fmt17(t) + "=" + fmt17(ratio) + " ";
    // functional-equation self-consistency
    cdouble w = gamma_factor(cdouble{0.0, t}, gf);
    double fe = std::abs(gamma_factor(cdouble{1.0, -t}, gf) * w - 1.0);
    emit(csv, 12, "feq_defect_t" + fmt17(t), fe);
    pass = pass && fe <= 1e-9;
  }
  return finish(csv, 12, "gamma factor stirling", pass, det);
}

// -------------------------------------------------------------- criterion 13
CriterionResult crit13(VerifyEnv& env, CsvWriter& csv) {
  Timer tm("criterion 13");
  env.ensure_small();
  const FourierTable& f = env.small_form(12);
  const FourierTable& g = env.small_form(16);
  TwistSpec spec = TwistSpec::make(PhaseSpec::log_phase(1.0), 256.0, 2e5,
                                   make_window(1.0, 2.0, 4.0));
  std::size_t saved = thread_count();
  set_thread_count(1);
  cdouble s1 = eval_twist_sum(f, g, spec);
  set_thread_count(8);
  cdouble s8 = eval_twist_sum(f, g, spec);
  set_thread_count(saved);
  bool bitsame = std::memcmp(&s1, &s8, sizeof s1) == 0;
  emit(csv, 13, "sum_1thread_re", s1.real());
  emit(csv, 13, "sum_8thread_re", s8.real());
  emit(csv, 13, "bit_identical", bitsame ? 1.0 : 0.0);
  return finish(csv, 13, "deterministic reduction", bitsame,
                bitsame ? "bit-identical" : "MISMATCH");
}

}  // namespace

void VerifyEnv::ensure_small() {
  if (!small.empty()) return;
  Timer tm("coefficient tables N=1e6");
  std::vector<int> ws(std::begin(kSupportedWeights),
                      std::end(kSupportedWeights));
  const std::size_t N = 1000000;
  if (!cache_dir.empty()) {
    bool all = true;
    std::map<int, FourierTable> loaded;
    for (int w : ws) {
      auto t = load_coeff_cache(cache_dir + "/" + coeff_cache_filename(w, N));
      if (!t) {
        all = false;
        break;
      }
      loaded[w] = std::move(*t);
    }
    if (all) {
      small = std::move(loaded);
      return;
    }
  }
  auto built = build_eigenforms(ws, N);
  if (!cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
  }
  for (auto& t : built) {
    if (!cache_dir.empty())
      save_coeff_cache(t, cache_dir + "/" + coeff_cache_filename(t.weight, N));
    small[t.weight] = std::move(t);
  }
}

void VerifyEnv::ensure_big() {
  if (!big.empty()) return;
  Timer tm("coefficient tables N=2^22");
  const std::size_t N = 1ull << 22;
  std::vector<int> ws = {12, 16};
  if (!cache_dir.empty()) {
    bool all = true;
    std::map<int, FourierTable> loaded;
    for (int w : ws) {
      auto t = load_coeff_cache(cache_dir + "/" + coeff_cache_filename(w, N));
      if (!t) {
        all = false;
        break;
      }
      loaded[w] = std::move(*t);
    }
    if (all) {
      big = std::move(loaded);
      return;
    }
  }
  auto built = build_eigenforms(ws, N);
  if (!cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
  }
  for (auto& t : built) {
    if (!cache_dir.empty())
      save_coeff_cache(t, cache_dir + "/" + coeff_cache_filename(t.weight, N));
    big[t.weight] = std::move(t);
  }
}

const FourierTable& VerifyEnv::small_form(int weight) {
  ensure_small();
  auto it = small.find(weight);
  if (it == small.end()) throw UnsupportedWeight("small_form");
  return it->second;
}

const FourierTable& VerifyEnv::big_form(int weight) {
  ensure_big();
  auto it = big.find(weight);
  if (it == big.end()) throw UnsupportedWeight("big_form");
  return it->second;
}

std::vector<CriterionResult> run_criteria(VerifyEnv& env, int first, int last,
                                          CsvWriter& csv) {
  using Fn = CriterionResult (*)(VerifyEnv&, CsvWriter&);
  static const Fn table[13] = {crit1, crit2, crit3,  crit4,  crit5,
                               crit6, crit7, crit8,  crit9,  crit10,
                               crit11, crit12, crit13};
  if (first < 1 || last > 13 || first > last)
    throw UsageError("run_criteria: range must be within 1..13");
  std::vector<CriterionResult> out;
  for (int id = first; id <= last; ++id) out.push_back(table[id - 1](env, csv));
  return out;
}

std::vector<CriterionResult> run_fast_checks(VerifyEnv& env, CsvWriter& csv) {
  (void)env;
  std::vector<CriterionResult> out;
  // coefficients and Hecke at small scale
  {
    auto d = build_eigenform(12, 20000);
    auto oracle = delta_oracle(8);
    bool ok = true;
    for (int n : {2, 3, 5}) {
      double a = d[n] * std::pow((double)n, 5.5);
      ok = ok && std::abs(a - (double)oracle[n]) <= 1e-8 * std::abs(a);
    }
    auto rep = verify_hecke(d, 1e-10);
    ok = ok && rep.pass(1e-10);
    emit(csv, 101, "hecke_small", rep.max_mult_defect);
    out.push_back(finish(csv, 101, "forms.verify_hecke fast", ok, ""));

    // one Voronoi instance
    SmoothWindow h = make_window(1.0, 3.0, 2.0);
    VoronoiInstance inst{&d, 3, 1, 25.0, h};
    auto s = voronoi_sides(inst);
    emit(csv, 102, "voronoi_defect", s.defect);
    out.push_back(
        finish(csv, 102, "voronoi fast", s.defect <= 1e-6, fmt17(s.defect)));

    // twist hand-sum oracle, X = 10, t = 5
    auto g16 = build_eigenform(16, 20000);
    TwistSpec spec = TwistSpec::make(PhaseSpec::log_phase(1.0), 5.0, 10.0,
                                     make_window(1.0, 2.0, 4.0));
    cdouble S = eval_twist_sum(d, g16, spec);
    KahanSum<cdouble> hand;
    for (int n = 10; n <= 20; ++n)
      hand.add(d[n] * g16[n] * spec.window(n / 10.0) *
               e_of(5.0 * std::log(n / 10.0)));
    double defect = std::abs(S - hand.value());
    emit(csv, 103, "twist_hand_defect", defect);
    // conjugation symmetry under t -> -t
    TwistSpec specm = spec;
    specm.t = -5.0;
    double conj_defect = std::abs(std::conj(S) - eval_twist_sum(d, g16, specm));
    bool ok2 = defect <= 1e-12 && conj_defect <= 1e-12;
    out.push_back(finish(csv, 103, "twist fast", ok2, fmt17(defect)));
  }
  // delta identity at Q = 12
  {
    DeltaScheme s = DeltaScheme::make(12.0, 0);
    double worst = 0;
    for (long long n = -5; n <= 5; ++n)
      worst = std::max(worst, std::abs(dfi_delta(n, s) - (n == 0 ? 1.0 : 0.0)));
    emit(csv, 104, "delta_defect", worst);
    out.push_back(finish(csv, 104, "delta fast", worst <= 1e-7, fmt17(worst)));
  }
  // exact exponent pairs and gamma factor (cheap, run in full form)
  out.push_back(crit11(env, csv));
  out.push_back(crit12(env, csv));
  // one stationary-phase point
  {
    SmoothWindow w = make_window(1.0, 2.0, 8.0);
    double H = 1e4;
    auto rep = stationary_leading_term(
        w,
        [H](double y) {
          double u = y - 1.5;
          return H * (u * u + u * u * u);
        },
        [H](double y) {
          double u = y - 1.5;
          return H * (2.0 * u + 3.0 * u * u);
        },
        [H](double y) { return H * (2.0 + 6.0 * (y - 1.5)); });
    emit(csv, 105, "stationary_defect", rep.rel_defect);
    out.push_back(finish(csv, 105, "stationary fast", rep.rel_defect <= 1e-3,
                         fmt17(rep.rel_defect)));
  }
  return out;
}

}  // namespace oscsum
