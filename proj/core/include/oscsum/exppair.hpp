#pragma once
#include <string>
#include <vector>

#include "oscsum/rational.hpp"

namespace oscsum {

// Exponent pair (p, q), exact rationals in the admissible box
// 0 <= p <= 1/2 <= q <= 1, with the A/B word that produced it.
struct ExponentPair {
  Rational p, q;
  std::string derivation;  // e.g. "AB(bourgain)"
};

ExponentPair trivial_pair();   // (0, 1)
ExponentPair bourgain_pair();  // (13/84, 55/84), the +epsilon dropped

// A: (k,h) -> (k/(2k+2), (k+h+1)/(2k+2)).  B: (k,h) -> (h-1/2, k+1/2).
ExponentPair a_process(const ExponentPair& e);
ExponentPair b_process(const ExponentPair& e);

// Closure of the seeds under words in {A, B} of length <= depth, deduplicated
// exactly; depth <= 12.
std::vector<ExponentPair> generate(int depth,
                                   const std::vector<ExponentPair>& seeds);

// Rational-linear fractional objective (a0 + a1 p + a2 q)/(b0 + b1 p + b2 q).
struct Objective {
  Rational a0, a1, a2, b0, b1, b2;
  Rational eval(const ExponentPair& e) const;  // DenominatorVanishes
};
// The minimized objective of the degree-5 application:
// (38 + 33 p - 28 q) / (58 + 48 p - 43 q).
Objective remark_objective();

struct OptResult {
  ExponentPair best;
  Rational value;
};
// Exact minimum; ties broken lexicographically by (p, q).
OptResult optimize(const Objective& obj,
                   const std::vector<ExponentPair>& pairs);

// Solves a*delta + b = c - delta exactly: delta = (c - b)/(a + 1).
Rational solve_linear_balance(const Rational& a, const Rational& b,
                              const Rational& c);
// The concrete balancing (109/69) delta + 91/138 = 2/3 - delta  ->  1/356.
Rational balance_delta();

}  // namespace oscsum
