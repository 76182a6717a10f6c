#include "oscsum/exppair.hpp"

#include <algorithm>
#include <set>

#include "oscsum/errors.hpp"

namespace oscsum {

namespace {
void check_admissible(const ExponentPair& e) {
  Rational zero(0), half(1, 2), one(1);
  if (e.p < zero || e.p > half || e.q < half || e.q > one)
    throw RangeExceeded("exponent pair outside the admissible box");
}
}  // namespace

ExponentPair trivial_pair() { return {Rational(0), Rational(1), "trivial"}; }
ExponentPair bourgain_pair() {
  return {Rational(13, 84), Rational(55, 84), "bourgain"};
}

ExponentPair a_process(const ExponentPair& e) {
  check_admissible(e);
  Rational den = Rational(2) * e.p + Rational(2);
  ExponentPair r;
  r.p = e.p / den;
  r.q = (e.p + e.q + Rational(1)) / den;
  r.derivation = "A" + e.derivation;
  return r;
}

ExponentPair b_process(const ExponentPair& e) {
  check_admissible(e);
  ExponentPair r;
  r.p = e.q - Rational(1, 2);
  r.q = e.p + Rational(1, 2);
  r.derivation = "B" + e.derivation;
  return r;
}

std::vector<ExponentPair> generate(int depth,
                                   const std::vector<ExponentPair>& seeds) {
  if (depth < 0 || depth > 12)
    throw RangeExceeded("generate: depth must be in [0, 12]");
  std::vector<ExponentPair> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto push = [&](const ExponentPair& e) {
    auto key = std::make_pair(e.p.str(), e.q.str());
    if (seen.insert(key).second) {
      out.push_back(e);
      return true;
    }
    return false;
  };
  std::vector<ExponentPair> frontier;
  for (const auto& s : seeds) {
    check_admissible(s);
    if (push(s)) frontier.push_back(s);
  }
  for (int d = 0; d < depth; ++d) {
    std::vector<ExponentPair> next;
    for (const auto& e : frontier) {
      ExponentPair a = a_process(e), b = b_process(e);
      if (push(a)) next.push_back(a);
      if (push(b)) next.push_back(b);
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

Rational Objective::eval(const ExponentPair& e) const {
  Rational den = b0 + b1 * e.p + b2 * e.q;
  if (den.is_zero()) throw DenominatorVanishes("Objective::eval");
  return (a0 + a1 * e.p + a2 * e.q) / den;
}

Objective remark_objective() {
  return {Rational(38), Rational(33), Rational(-28),
          Rational(58), Rational(48), Rational(-43)};
}

OptResult optimize(const Objective& obj,
                   const std::vector<ExponentPair>& pairs) {
  if (pairs.empty()) throw UsageError("optimize: empty pair set");
  OptResult best{pairs[0], obj.eval(pairs[0])};
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    Rational v = obj.eval(pairs[i]);
    bool better = v < best.value;
    bool tie = v == best.value &&
               (pairs[i].p < best.best.p ||
                (pairs[i].p == best.best.p && pairs[i].q < best.best.q));
    if (better || tie) best = {pairs[i], v};
  }
  return best;
}

Rational solve_linear_balance(const Rational& a, const Rational& b,
                              const Rational& c) {
  Rational den = a + Rational(1);
  if (den.is_zero()) throw DenominatorVanishes("solve_linear_balance");
  return (c - b) / den;
}

Rational balance_delta() {
  return solve_linear_balance(Rational(109, 69), Rational(91, 138),
                              Rational(2, 3));
}

}  // namespace oscsum
