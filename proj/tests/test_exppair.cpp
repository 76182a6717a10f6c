#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscsum/errors.hpp"
#include "oscsum/exppair.hpp"

using namespace oscsum;

TEST_CASE("seed pairs") {
  CHECK(trivial_pair().p == Rational(0));
  CHECK(trivial_pair().q == Rational(1));
  CHECK(bourgain_pair().p == Rational(13, 84));
  CHECK(bourgain_pair().q == Rational(55, 84));
}

TEST_CASE("A and B processes, exact") {
  // A(0,1) = (0, 1/2)? no: (k/(2k+2), (k+h+1)/(2k+2)) = (0, 2/2) = (0, 1)...
  // with (k,h) = (0,1): (0/(2), (0+1+1)/2) = (0, 1): A fixes the trivial pair
  auto at = a_process(trivial_pair());
  CHECK(at.p == Rational(0));
  CHECK(at.q == Rational(1));
  // A(1/2, 1/2) = (1/6, 2/3)
  ExponentPair half{Rational(1, 2), Rational(1, 2), "B(trivial)"};
  auto ah = a_process(half);
  CHECK(ah.p == Rational(1, 6));
  CHECK(ah.q == Rational(2, 3));
  // A applied to the bourgain pair: the value used downstream
  auto ab = a_process(bourgain_pair());
  CHECK(ab.p == Rational(13, 194));
  CHECK(ab.q == Rational(76, 97));
  // B is an involution
  auto bb = b_process(b_process(bourgain_pair()));
  CHECK(bb.p == bourgain_pair().p);
  CHECK(bb.q == bourgain_pair().q);
  // B swaps: B(13/84, 55/84) = (55/84 - 1/2, 13/84 + 1/2) = (13/84, 55/84)...
  auto b = b_process(bourgain_pair());
  CHECK(b.p == Rational(55, 84) - Rational(1, 2));
  CHECK(b.q == Rational(13, 84) + Rational(1, 2));
}

TEST_CASE("closure generation") {
  auto seeds = std::vector<ExponentPair>{trivial_pair(), bourgain_pair()};
  auto d0 = generate(0, seeds);
  CHECK(d0.size() == 2);
  auto d1 = generate(1, seeds);
  CHECK(d1.size() > d0.size());
  auto d6 = generate(6, seeds);
  CHECK(d6.size() > d1.size());
  // all admissible
  for (const auto& e : d6) {
    CHECK(e.p >= Rational(0));
    CHECK(e.p <= Rational(1, 2));
    CHECK(e.q >= Rational(1, 2));
    CHECK(e.q <= Rational(1));
  }
  // dedupe: no repeated (p, q)
  for (std::size_t i = 0; i < d6.size(); ++i)
    for (std::size_t j = i + 1; j < d6.size(); ++j)
      CHECK(!(d6[i].p == d6[j].p && d6[i].q == d6[j].q));
  CHECK_THROWS_AS(generate(13, seeds), RangeExceeded);
}

TEST_CASE("objective and optimization") {
  Objective obj = remark_objective();
  // trivial pair: (38 - 28)/(58 - 43) = 10/15 = 2/3
  CHECK(obj.eval(trivial_pair()) == Rational(2, 3));
  auto pairs = generate(6, {trivial_pair(), bourgain_pair()});
  auto best = optimize(obj, pairs);
  // minimum at A(bourgain) = (13/194, 76/97)
  CHECK(best.best.p == Rational(13, 194));
  CHECK(best.best.q == Rational(76, 97));
  CHECK(best.value < Rational(2, 3));
  for (const auto& e : pairs) CHECK(best.value <= obj.eval(e));
  // a vanishing denominator is reported, not silently evaluated
  Objective degenerate{Rational(0), Rational(1), Rational(0),
                       Rational(0), Rational(1), Rational(0)};
  CHECK_THROWS_AS(degenerate.eval(trivial_pair()), DenominatorVanishes);
}

TEST_CASE("balance equation") {
  CHECK(solve_linear_balance(Rational(1), Rational(0), Rational(1)) ==
        Rational(1, 2));
  CHECK(solve_linear_balance(Rational(109, 69), Rational(91, 138),
                             Rational(2, 3)) == balance_delta());
  CHECK(balance_delta() == Rational(1, 356));
  CHECK_THROWS_AS(
      solve_linear_balance(Rational(-1), Rational(0), Rational(1)),
      DenominatorVanishes);
}
