#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/deltamethod.hpp"

using namespace oscsum;

TEST_CASE("scheme normalization") {
  for (int shape : {0, 1}) {
    DeltaScheme s = DeltaScheme::make(12.0, shape);
    CHECK(s.lattice_sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.w(1.0) == 0.0);              // below the support [Q/2, Q]
    CHECK(s.w(2.0 * s.Q) == 0.0);        // above
    CHECK(s.integral_defect() < 0.05);   // Poisson defect, small but nonzero
  }
}

TEST_CASE("delta identity at small modulus scale") {
  DeltaScheme s = DeltaScheme::make(12.0);
  CHECK(std::abs(dfi_delta(0, s) - 1.0) < 1e-7);
  for (long long n : {-7LL, -2LL, -1LL, 1LL, 3LL, 8LL})
    CHECK(std::abs(dfi_delta(n, s)) < 1e-7);
}

TEST_CASE("character sum equals ramanujan closed form") {
  DeltaScheme s = DeltaScheme::make(10.0);
  for (long long n = -6; n <= 6; ++n)
    CHECK(dfi_delta(n, s) ==
          doctest::Approx(dfi_delta_ramanujan(n, s)).epsilon(1e-12));
}

TEST_CASE("two window shapes agree") {
  DeltaScheme s0 = DeltaScheme::make(14.0, 0);
  DeltaScheme s1 = DeltaScheme::make(14.0, 1);
  for (long long n : {0LL, 1LL, 5LL})
    CHECK(std::abs(dfi_delta(n, s0) - dfi_delta(n, s1)) < 2e-7);
}

TEST_CASE("Delta_q profile integrates into g near 1") {
  DeltaScheme s = DeltaScheme::make(16.0);
  auto rep = g_properties_check(s, 1, {0.0, 0.5, 4.0});
  REQUIRE(rep.zeta.size() == 3);
  CHECK(rep.g_re[0] == doctest::Approx(1.0).epsilon(0.05));
  double g0 = std::hypot(rep.g_re[0], rep.g_im[0]);
  double g2 = std::hypot(rep.g_re[2], rep.g_im[2]);
  CHECK(g2 < g0);  // decay in |zeta|
}

TEST_CASE("poisson summation in congruence classes") {
  SmoothWindow h = make_window(1.0, 3.0, 4.0);
  for (int d : {1, 2, 3})
    for (int r = 0; r < d; ++r)
      CHECK(poisson_congruence_check(h, d, 50.0, r) < 1e-8);
}
