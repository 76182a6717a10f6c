#include "oscsum/rational.hpp"

#include "oscsum/errors.hpp"

namespace oscsum {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DenominatorVanishes("Rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
  mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DenominatorVanishes("Rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

}  // namespace oscsum
