#pragma once
#include <cstdint>
#include <vector>

#include "oscsum/forms.hpp"
#include "oscsum/quad.hpp"

namespace oscsum {

// Hankel-type Bessel transform attached to a holomorphic form of weight kappa:
//   Phi_h(x) = 2 pi i^kappa * int h(y) J_{kappa-1}(4 pi sqrt(xy)) dy.
cdouble phi_h_exact(double x, const SmoothWindow& h, int kappa,
                    double tol = 1e-10);

// Truncated asymptotic expansion of the same transform,
//   Phi_h(x) ~ x^{-1/4} int h(y) y^{-1/4} sum_{j<=J}
//              (c_j e(2 sqrt(xy)) + d_j e(-2 sqrt(xy))) (xy)^{-j/2} dy,
// with the c_j, d_j coming from the large-argument expansion of J_{kappa-1}.
cdouble phi_h_asymptotic(double x, const SmoothWindow& h, int kappa, int J,
                         double tol = 1e-12);

// One additive-twist Voronoi identity instance: the direct side
//   L = sum_n lambda(n) e(a n / q) h(n / X)
// against the dual side
//   R = (X / q) sum_n lambda(n) e(-abar n / q) Phi_h(n X / q^2).
struct VoronoiInstance {
  const FourierTable* form = nullptr;
  std::uint64_t q = 1;
  std::uint64_t a = 0;  // residue, gcd(a, q) = 1
  double X = 1.0;
  SmoothWindow h;
};

// Dual-side transform values Phi_h(n X / q^2), shared across residues a for a
// fixed (q, X, form).  Truncated once the tail is below the internal floor.
struct PhiCache {
  std::uint64_t q = 1;
  double X = 1.0;
  int kappa = 0;
  std::vector<cdouble> phi;  // phi[n], index 0 unused
};
PhiCache build_phi_cache(const FourierTable& form, std::uint64_t q, double X,
                         const SmoothWindow& h, double tol = 1e-10);

struct VoronoiSides {
  cdouble lhs, rhs;
  double defect;  // |lhs - rhs|
};
VoronoiSides voronoi_sides(const VoronoiInstance& inst,
                           const PhiCache* cache = nullptr);

// Resonant twist sum sum_n lambda(n) e(-2 sqrt(q n)) V(n/X) against its
// predicted main term (lambda(q) / q^{1/4}) * Vhat0 * X^{3/4}.
struct ResonanceResult {
  cdouble sum;
  cdouble main_term;
  double residual;       // |sum - main_term|
  double residual_norm;  // residual / (qX)^{1/4}
};
ResonanceResult resonance_sum(const FourierTable& form, std::uint64_t q,
                              double X, const SmoothWindow& V);

}  // namespace oscsum
