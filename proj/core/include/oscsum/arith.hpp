#pragma once
#include <cstdint>
#include <vector>

namespace oscsum {

// Number-theoretic primitives.  Factorization goes through a lazily built,
// read-only smallest-prime-factor sieve; ensure_sieve() grows it on demand
// (thread-safe, build happens at most once per size).
void ensure_sieve(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// c_q(m) = sum over d | gcd(|m|, q) of d * mu(q/d); gcd(0, q) = q, so
// c_q(0) = phi(q).
std::int64_t ramanujan_sum(std::int64_t m, std::uint64_t q);

// Inverse of a modulo q in [0, q); q = 1 returns 0.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t q);

}  // namespace oscsum
