#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/errors.hpp"
#include "oscsum/twist.hpp"

using namespace oscsum;

TEST_CASE("twist sum equals the hand-rolled sum") {
  auto f = build_eigenform(12, 100);
  auto g = build_eigenform(16, 100);
  TwistSpec spec = TwistSpec::make(PhaseSpec::log_phase(1.0), 5.0, 10.0,
                                   make_window(1.0, 2.0, 4.0));
  cdouble got = eval_twist_sum(f, g, spec);
  cdouble want = 0;
  for (std::size_t n = 1; n <= 30; ++n) {
    double u = (double)n / 10.0;
    want += f[n] * g[n] * e_of(5.0 * std::log(u)) * spec.window(u);
  }
  CHECK(std::abs(got - want) < 1e-12);
  // conjugation symmetry: flipping the phase sign conjugates the sum
  TwistSpec neg = TwistSpec::make(PhaseSpec::log_phase(-1.0), 5.0, 10.0,
                                  make_window(1.0, 2.0, 4.0));
  cdouble gotn = eval_twist_sum(f, g, neg);
  CHECK(std::abs(gotn - std::conj(got)) < 1e-12);
}

TEST_CASE("regime and window flags") {
  auto w = make_window(1.0, 2.0, 4.0);
  // t = 10: the regime (t^{8/5}, t^{12/5}) is about (39.8, 251)
  CHECK(TwistSpec::make(PhaseSpec::log_phase(1), 10.0, 100.0, w).in_regime);
  CHECK(!TwistSpec::make(PhaseSpec::log_phase(1), 10.0, 30.0, w).in_regime);
  CHECK(!TwistSpec::make(PhaseSpec::log_phase(1), 10.0, 300.0, w).in_regime);
}

TEST_CASE("sharp sum bracketing") {
  auto f = build_eigenform(12, 3000);
  auto g = build_eigenform(16, 3000);
  auto r = eval_sharp_sum(f, g, PhaseSpec::log_phase(1.0), 20.0, 1000.0);
  cdouble direct = 0;
  for (std::size_t n = 1001; n <= 2000; ++n)
    direct += f[n] * g[n] * e_of(20.0 * std::log((double)n / 1000.0));
  CHECK(std::abs(r.sharp - direct) < 1e-10);
  CHECK(r.defect <= r.edge_bound + 1e-9);
}

TEST_CASE("dirichlet polynomial equals the hand-rolled sum") {
  auto f = build_eigenform(12, 300);
  auto g = build_eigenform(16, 300);
  SmoothWindow V = make_window(1.0, 2.0, 4.0);
  cdouble got = dirichlet_polynomial(f, g, 100.0, 30.0, V);
  cdouble want = 0;
  for (std::size_t n = 1; n <= 300; ++n)
    want += f[n] * g[n] * e_of(-30.0 * std::log((double)n) / (2.0 * M_PI)) *
            V((double)n / 100.0);
  CHECK(std::abs(got - want) < 1e-12);
}

TEST_CASE("gamma factor functional identity") {
  GammaFactor gf = GammaFactor::make(16, 12);
  CHECK(gf.shift[0] == 0.0);
  CHECK(gf.shift[1] == 2.0);
  CHECK(gf.shift[2] == 3.0);
  CHECK(gf.shift[3] == 13.0);
  CHECK(gf.shift[4] == 14.0);
  for (cdouble s : {cdouble(0.3, 2.0), cdouble(0.5, 10.0), cdouble(1.2, -3.0)}) {
    cdouble prod = gamma_factor(s, gf) * gamma_factor(1.0 - s, gf);
    CHECK(std::abs(prod - 1.0) < 1e-8);
  }
  // Stirling main term on the critical line: |gamma(1-it)| ~ (t/2pi)^{5/2}
  for (double t : {50.0, 100.0, 200.0}) {
    double mag = std::abs(gamma_factor(cdouble(1.0, -t), gf));
    double main = std::pow(t / (2.0 * M_PI), 2.5);
    CHECK(std::abs(mag / main - 1.0) <= 5.0 / t);
  }
}

TEST_CASE("l-value: kernels agree and input checks fire") {
  auto f = build_eigenform(12, 30000);
  auto g = build_eigenform(16, 30000);
  auto lv = l_value_rankin(f, g, {300.0, 600.0, 1200.0}, 1.0);
  CHECK(lv.agreement < 1e-4);
  CHECK(lv.value > 0.1);
  CHECK(lv.value < 10.0);
  CHECK_THROWS_AS(l_value_rankin(f, f, {300.0, 600.0}, 1.0), UsageError);
  CHECK_THROWS_AS(l_value_rankin(f, g, {300.0}, 1.0), UsageError);
  CHECK_THROWS_AS(l_value_rankin(f, g, {300.0, 1e5}, 1.0), RangeExceeded);
}

TEST_CASE("gl5 partial sums with a synthetic sequence") {
  // l5(n) = L1 +/- 1 alternating: E(X) = 0 at even X, far below X^(2/3)
  std::vector<double> l5(5001, 0.0);
  for (std::size_t n = 1; n <= 5000; ++n)
    l5[n] = 0.7 + (n % 2 ? -1.0 : 1.0);
  auto rep = gl5_partial_sum_check(l5, {1000.0, 2000.0, 4000.0}, 0.7);
  CHECK(rep.max_normalized < 0.1);
  CHECK(!rep.monotone_growth);
  CHECK_THROWS_AS(gl5_partial_sum_check(l5, {9000.0}, 0.7), RangeExceeded);
  // a genuinely growing error must trip the trend flag
  std::vector<double> bad(5001, 0.0);
  for (std::size_t n = 1; n <= 5000; ++n)
    bad[n] = 0.7 + 0.5 * std::pow((double)n, 0.2);
  auto worse = gl5_partial_sum_check(bad, {1000.0, 2000.0, 4000.0}, 0.7);
  CHECK(worse.monotone_growth);
}

TEST_CASE("xi stationary check") {
  SmoothWindow V2 = make_window(0.5, 2.0, 4.0);
  // choose n X so that xi0 = 2 pi (nX)^{1/5}/T sits inside the window
  double T = 2000.0, n = 1.0;
  double X = std::pow(1.2 * T / (2.0 * M_PI), 5.0);
  auto rep = xi_stationary_check(n, X, T, V2);
  CHECK(!rep.outside_support);
  CHECK(rep.xi0 == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(rep.rel_defect < 1e-2);
  auto far = xi_stationary_check(1.0, 10.0, 2000.0, V2);
  CHECK(far.outside_support);
}
