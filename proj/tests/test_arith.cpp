#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/arith.hpp"
#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

using namespace oscsum;

TEST_CASE("mobius") {
  int expect[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == expect[n]);
  CHECK(mobius(30) == -1);
  CHECK(mobius(210) == 1);
  CHECK(mobius(49) == 0);
}

TEST_CASE("euler_phi") {
  std::uint64_t expect[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int n = 1; n <= 12; ++n) CHECK(euler_phi(n) == expect[n]);
  CHECK(euler_phi(100) == 40);
  CHECK(euler_phi(997) == 996);  // prime
}

TEST_CASE("divisors") {
  auto d = divisors(12);
  CHECK(d.size() == 6);
  std::uint64_t sum = 0;
  for (auto v : d) sum += v;
  CHECK(sum == 28);
  CHECK(divisors(1).size() == 1);
  CHECK(divisors(97).size() == 2);
}

TEST_CASE("ramanujan sums") {
  // c_q(1) = mu(q), c_q(0) = phi(q)
  for (std::uint64_t q = 1; q <= 30; ++q) {
    CHECK(ramanujan_sum(1, q) == mobius(q));
    CHECK(ramanujan_sum(0, q) == (std::int64_t)euler_phi(q));
  }
  CHECK(ramanujan_sum(2, 4) == -2);
  CHECK(ramanujan_sum(4, 4) == 2);
  CHECK(ramanujan_sum(3, 9) == -3);
  CHECK(ramanujan_sum(-3, 9) == -3);  // even in m
  // direct character-sum cross-check: c_q(m) = sum_{(a,q)=1} cos(2 pi a m / q)
  for (std::uint64_t q = 1; q <= 12; ++q)
    for (std::int64_t m = -5; m <= 5; ++m) {
      double s = 0;
      for (std::uint64_t a = 1; a <= q; ++a) {
        std::uint64_t g = a, b = q;
        while (b) { auto t = g % b; g = b; b = t; }
        if (g == 1) s += std::cos(2.0 * M_PI * (double)a * (double)m / (double)q);
      }
      CHECK((double)ramanujan_sum(m, q) == doctest::Approx(s).epsilon(1e-9));
    }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(1, 1) == 0);
  CHECK(mod_inverse(-1, 5) == 4);
  for (std::uint64_t q = 2; q <= 50; ++q)
    for (std::int64_t a = 1; a < (std::int64_t)q; ++a) {
      std::uint64_t g = a, b = q;
      while (b) { auto t = g % b; g = b; b = t; }
      if (g != 1) continue;
      auto inv = mod_inverse(a, q);
      CHECK((a * inv) % q == 1);
    }
  CHECK_THROWS_AS(mod_inverse(2, 4), NonInvertible);
}

TEST_CASE("block_sum is thread-count invariant bit for bit") {
  auto term = [](std::size_t i) {
    return std::complex<double>(std::sin(0.1 * (double)i) / (double)i,
                                std::cos(0.2 * (double)i) / (double)i);
  };
  set_thread_count(1);
  auto s1 = block_sum(1, 100001, term);
  set_thread_count(8);
  auto s8 = block_sum(1, 100001, term);
  set_thread_count(0);
  CHECK(s1.real() == s8.real());
  CHECK(s1.imag() == s8.imag());
}

TEST_CASE("kahan sum beats naive on ill-conditioned input") {
  KahanSum<double> k;
  double naive = 0;
  for (int i = 0; i < 100000; ++i) {
    double v = (i % 2 == 0) ? 1.0 + 1e-14 * i : -1.0;
    k.add(v);
    naive += v;
  }
  double exact = 1e-14 * (49999.0 * 50000.0);
  CHECK(std::abs(k.value() - exact) < 1e-12);
  (void)naive;
}
