#pragma once
#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace oscsum {

// Exact rational numbers on top of GMP's mpq_t.  Always canonical (lowest
// terms, positive denominator).  Only the operations the exponent-pair
// calculus and exact oracles need.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(std::int64_t num, std::int64_t den = 1);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(Rational o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  double to_double() const { return mpq_get_d(q_); }
  std::string str() const;  // "num/den", or "num" when den == 1

 private:
  mpq_t q_;
};

}  // namespace oscsum
