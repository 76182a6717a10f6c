#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_gamma.h>

#include "oscsum/errors.hpp"
#include "oscsum/quad.hpp"

using namespace oscsum;

TEST_CASE("additive character") {
  CHECK(e_of(0.0) == cdouble(1.0, 0.0));
  CHECK(std::abs(e_of(0.25) - cdouble(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(e_of(0.5) + 1.0) < 1e-15);
  CHECK(std::abs(e_of(1.0 / 3) * e_of(2.0 / 3) - 1.0) < 1e-15);
}

TEST_CASE("smooth window shape") {
  SmoothWindow w = make_window(1.0, 2.0, 8.0);
  CHECK(w(0.9) == 0.0);
  CHECK(w(2.1) == 0.0);
  CHECK(w(1.5) == 1.0);
  CHECK(w(1.125) == 1.0);  // plateau edge
  double v = w(1.06);      // inside the transition
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(w.delta() == doctest::Approx(8.0));
  CHECK_THROWS_AS(make_window(0.0, 1.0, 2.0), DegenerateSupport);
}

TEST_CASE("phase specs") {
  PhaseSpec lg = PhaseSpec::log_phase(2.5);
  CHECK(lg.phi(std::exp(1.0)) == doctest::Approx(2.5));
  CHECK(lg.dphi(4.0) == doctest::Approx(2.5 / 4.0));
  CHECK(lg.c() == doctest::Approx(5.0));
  CHECK(lg.beta_sub() == doctest::Approx(1.0));
  PhaseSpec pw = PhaseSpec::power_phase(3.0, 0.4);
  CHECK(pw.phi(2.0) == doctest::Approx(3.0 * std::pow(2.0, 0.4)));
  CHECK(pw.dphi(2.0) == doctest::Approx(1.2 * std::pow(2.0, -0.6)));
  CHECK(pw.c() == doctest::Approx(2.4));
  CHECK(pw.beta_sub() == doctest::Approx(0.2));
  CHECK_THROWS(PhaseSpec::power_phase(1.0, 0.5));
  CHECK_THROWS(PhaseSpec::power_phase(1.0, 0.75));
}

TEST_CASE("bessel against gsl") {
  for (int nu : {0, 1, 2, 5, 11, 15, 31, 64})
    for (double x : {0.01, 0.5, 1.0, 3.7, 10.0, 55.5, 300.0, 1234.5, 9876.5}) {
      double got = bessel_j(nu, x);
      double ref = gsl_sf_bessel_Jn(nu, x);
      // envelope-relative: the oscillation scale at large x is sqrt(2/pi x)
      double scale = std::max(std::sqrt(2.0 / (M_PI * std::max(x, 1.0))), 1e-30);
      CHECK(std::abs(got - ref) / scale < 5e-11);
    }
}

TEST_CASE("complex gamma") {
  CHECK(std::abs(complex_gamma(cdouble(0.5, 0)) - std::sqrt(M_PI)) < 1e-13);
  CHECK(std::abs(complex_gamma(cdouble(5, 0)) - 24.0) < 1e-11);
  gsl_sf_result lnr, arg;
  gsl_sf_lngamma_complex_e(1.0, 1.0, &lnr, &arg);
  cdouble ref = std::exp(cdouble(lnr.val, arg.val));
  CHECK(std::abs(complex_gamma(cdouble(1, 1)) - ref) < 1e-12);
  // reflection side
  gsl_sf_lngamma_complex_e(-1.5, 2.0, &lnr, &arg);
  ref = std::exp(cdouble(lnr.val, arg.val));
  CHECK(std::abs(complex_gamma(cdouble(-1.5, 2.0)) - ref) /
            std::abs(ref) < 1e-11);
}

TEST_CASE("oscillatory quadrature: closed forms") {
  // int_0^1 e^{i w x} dx = (e^{iw} - 1)/(iw)
  for (double w : {5.0, 50.0, 500.0}) {
    cdouble got = oscillatory_integral([](double) { return 1.0; },
                                       [w](double x) { return w * x; },
                                       [w](double) { return w; }, 0.0, 1.0,
                                       1e-12);
    cdouble ref = (std::exp(cdouble(0, w)) - 1.0) / cdouble(0, w);
    CHECK(std::abs(got - ref) < 1e-10);
  }
  // full Fresnel-type integral int_-8^8 e^{i x^2} dx ~ sqrt(pi) e^{i pi/4}
  cdouble fres = oscillatory_integral([](double) { return 1.0; },
                                      [](double x) { return x * x; },
                                      [](double x) { return 2 * x; }, -8.0, 8.0,
                                      1e-10);
  cdouble ref = std::sqrt(M_PI) * std::exp(cdouble(0, M_PI / 4));
  CHECK(std::abs(fres - ref) < 0.2);  // truncation tail ~ 1/8
}

TEST_CASE("mellin transform") {
  SmoothWindow w = make_window(1.0, 2.0, 8.0);
  // s = 1 gives the plain integral
  cdouble m1 = mellin_transform(w, cdouble(1, 0));
  cdouble direct = oscillatory_integral([&w](double x) { return w(x); },
                                        [](double) { return 0.0; }, nullptr,
                                        1.0, 2.0, 1e-12);
  CHECK(std::abs(m1 - direct) < 1e-9);
  // shift identity: M[s+1] = int w x^s dx, check against s = 2 directly
  cdouble m3 = mellin_transform(w, cdouble(3, 0));
  cdouble d3 = oscillatory_integral([&w](double x) { return w(x) * x * x; },
                                    [](double) { return 0.0; }, nullptr, 1.0,
                                    2.0, 1e-12);
  CHECK(std::abs(m3 - d3) < 1e-9);
}
