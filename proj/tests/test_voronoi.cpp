#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/voronoi.hpp"

using namespace oscsum;

TEST_CASE("hankel transform: exact vs asymptotic expansion") {
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  for (int kappa : {12, 16}) {
    for (double x : {150.0, 500.0, 2000.0}) {
      cdouble ex = phi_h_exact(x, h, kappa, 1e-12);
      cdouble as = phi_h_asymptotic(x, h, kappa, 8);
      // J = 8 truncation error ~ x^{-19/4}; generous absolute floor
      CHECK(std::abs(ex - as) < 5e-9);
    }
    // order J improves the defect
    double d0 = std::abs(phi_h_exact(400.0, h, kappa, 1e-12) -
                         phi_h_asymptotic(400.0, h, kappa, 0));
    double d2 = std::abs(phi_h_exact(400.0, h, kappa, 1e-12) -
                         phi_h_asymptotic(400.0, h, kappa, 2));
    CHECK(d2 < d0);
  }
}

TEST_CASE("phi cache matches direct evaluation") {
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  auto f = build_eigenform(12, 20000);
  PhiCache cache = build_phi_cache(f, 2, 25.0, h);
  REQUIRE(cache.phi.size() > 10);
  for (std::size_t n : {1, 2, 5, 9}) {
    cdouble direct = phi_h_exact((double)n * 25.0 / 4.0, h, 12, 1e-11);
    CHECK(std::abs(cache.phi[n] - direct) < 1e-9);
  }
}

TEST_CASE("voronoi identity: both sides agree") {
  SmoothWindow h = make_window(1.0, 3.0, 2.0);
  auto f = build_eigenform(12, 20000);
  for (std::uint64_t q : {1, 2, 3}) {
    std::uint64_t a = q == 1 ? 0 : 1;
    VoronoiInstance inst{&f, q, a, 25.0, h};
    auto s = voronoi_sides(inst);
    CHECK(s.defect < 1e-6);
    CHECK(std::abs(s.lhs) > 1e-4);  // not vacuous
  }
  // two residues mod 3 share one cache
  PhiCache cache = build_phi_cache(f, 3, 25.0, h);
  auto s1 = voronoi_sides({&f, 3, 1, 25.0, h}, &cache);
  auto s2 = voronoi_sides({&f, 3, 2, 25.0, h}, &cache);
  CHECK(s1.defect < 1e-6);
  CHECK(s2.defect < 1e-6);
  CHECK(std::abs(s1.lhs - s2.lhs) > 1e-8);  // genuinely different residues
}

TEST_CASE("resonance sum tracks its main term") {
  auto f = build_eigenform(12, 200000);
  SmoothWindow V = make_window(1.0, 2.0, 4.0);
  auto r1 = resonance_sum(f, 2, 1e4, V);
  auto r2 = resonance_sum(f, 2, 4e4, V);
  CHECK(std::abs(r1.main_term) > 1.0);
  CHECK(r1.residual_norm == doctest::Approx(r1.residual /
                                            std::pow(2.0e4, 0.25)));
  // the predicted main term scales exactly like X^{3/4}
  CHECK(std::abs(r2.main_term) / std::abs(r1.main_term) ==
        doctest::Approx(std::pow(4.0, 0.75)).epsilon(1e-9));
  // the normalized residual does not blow up when X quadruples
  CHECK(r2.residual_norm < 2.5 * r1.residual_norm);
}
