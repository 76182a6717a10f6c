#pragma once
#include <vector>

#include "oscsum/quad.hpp"

namespace oscsum {

// DFI delta scheme: a smooth w supported in [Q/2, Q], normalized so that the
// lattice sum over integers equals 1 -- that is the normalization under which
// delta(0) = sum_m w(m) is exactly 1.  The continuous integral of w then
// equals 1 only up to a Poisson-summation defect, reported separately.
struct DeltaScheme {
  double Q = 0;
  SmoothWindow shape;
  double norm = 1.0;  // multiplies shape so that sum_{m >= 1} w(m) = 1

  // shape_id 0: plateau window on [Q/2, Q]; shape_id 1: narrower plateau,
  // different transition widths (a second admissible w for cross-checks)
  static DeltaScheme make(double Q, int shape_id = 0);

  double w(double x) const { return norm * shape(x); }
  double lattice_sum() const;     // sum over integers of w(m) (= 1 by choice)
  double integral_defect() const; // |integral of w - 1|, quadrature
};

// delta(n) = sum_q sum*_{a mod q} e(an/q) Delta_q(n),
// Delta_q(u) = sum_r (qr)^{-1} ( w(qr) - w(|u|/(qr)) ).
// Character sums evaluated directly from the a-loop.
double dfi_delta(long long n, const DeltaScheme& s);
// Same value with the a-sum replaced by the exact Ramanujan sum c_q(n).
double dfi_delta_ramanujan(long long n, const DeltaScheme& s);

double delta_q_profile(const DeltaScheme& s, int q, double u);

struct GReport {
  std::vector<double> zeta;
  std::vector<double> g_re;  // reconstructed g(q, zeta), real part
  std::vector<double> g_im;
};
// g(q, zeta) = qQ * integral of Delta_q(qQ v) e(-v zeta) dv, reconstructed by
// quadrature (behavioral check of Eqs. for g: near 1 for small q, zeta; decays
// in |zeta|).
GReport g_properties_check(const DeltaScheme& s, int q,
                           const std::vector<double>& zetas);

// Poisson summation in a congruence class: both sides of
//   sum_{m = r mod d} h(m/M) = (M/d) sum_mt e(mt r/d) hhat(mt M/d)
// with hhat by quadrature; returns the absolute defect.
double poisson_congruence_check(const SmoothWindow& h, int d, double M, int r);

}  // namespace oscsum
