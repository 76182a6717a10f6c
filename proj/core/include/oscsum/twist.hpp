#pragma once
#include <cstdint>
#include <vector>

#include "oscsum/forms.hpp"
#include "oscsum/quad.hpp"

namespace oscsum {

// One nonlinear-twist sum  S = sum_n lf(n) lg(n) e(t phi(n/X)) V(n/X).
struct TwistSpec {
  PhaseSpec phase;
  double t = 1;
  double X = 1;
  SmoothWindow window;
  bool in_regime = false;     // t^{8/5} < X < t^{12/5}
  bool window_sharp = false;  // delta above ~3 sqrt(t)/log t

  static TwistSpec make(const PhaseSpec& phase, double t, double X,
                        const SmoothWindow& window);
};

cdouble eval_twist_sum(const FourierTable& f, const FourierTable& g,
                       const TwistSpec& spec);

// Sharp-cutoff companion sum over X < n <= 2X and the smoothed bracketing
// defect |sharp - smoothed|, which edge terms keep of order sqrt(X)-ish.
struct SharpSumResult {
  cdouble sharp{};
  cdouble smoothed{};
  double defect = 0;      // |sharp - smoothed|
  double edge_bound = 0;  // sum of |lf lg| over the two edge bands
};
SharpSumResult eval_sharp_sum(const FourierTable& f, const FourierTable& g,
                              const PhaseSpec& phase, double t, double X);

// Sweep of normalized constants C* = |S| / (t^{2/5} X^{3/4}) over a
// (t, X) grid; per-t least-squares slope of log C* against log X, and the
// per-doubling growth rate of the 90th percentile of C* between the lower
// and upper halves of the pooled X range.
struct HarnessPoint {
  double t = 0, X = 0;
  cdouble S{};
  double Cstar = 0;
  bool in_regime = false;
};
struct HarnessReport {
  std::vector<HarnessPoint> points;
  double max_Cstar = 0;
  double max_slope = -1e9;   // max over t of the per-t log-log slope
  double p90_ratio = 0;      // per-doubling growth of the 90th pct of C*
};
HarnessReport theorem1_harness(const FourierTable& f, const FourierTable& g,
                               const PhaseSpec& phase,
                               const std::vector<double>& ts,
                               const std::vector<double>& Xs);

// D(N, t) = sum_n lf lg(n) n^{-it} V(n/N).
cdouble dirichlet_polynomial(const FourierTable& f, const FourierTable& g,
                             double N, double t, const SmoothWindow& V);
// sup over dyadic N <= t^2 of |D(N,t)| / sqrt(N).
struct DirichletReport {
  double t = 0;
  double sup_norm = 0;   // the sup above
  double at_N = 0;       // where it is attained
};
DirichletReport dirichlet_sup(const FourierTable& f, const FourierTable& g,
                              double t);

// Degree-5 gamma factor of L(s, 1 boxplus f x g)-type data: shifts
// 0, (k-kappa)/2, (k-kappa)/2 + 1, (k+kappa)/2 - 1, (k+kappa)/2.
struct GammaFactor {
  int k = 0, kappa = 0;
  double shift[5] = {0, 0, 0, 0, 0};
  static GammaFactor make(int k, int kappa);
};
// gamma(s) = (pi^-5)^(s-1/2) prod_j Gamma((s+kj)/2) / Gamma((1-s+kj)/2);
// satisfies gamma(s) gamma(1-s) = 1 identically.
cdouble gamma_factor(cdouble s, const GammaFactor& gf);

// L(1, f x g) as the limit of mollified partial sums
//   sum lf lg(n)/n * m(n/T),  with two independent kernels whose Mellin
// transforms vanish at the first error pole, plus a T -> infinity fit.
struct LValueResult {
  double value = 0;       // combined limit
  double limit_exp = 0;   // exponential-family kernel
  double limit_gauss = 0; // Gaussian kernel
  double agreement = 0;   // |limit_exp - limit_gauss|
  double stability = 0;   // max_k |v(4T) - v(T)| over both kernels
  std::vector<double> T;
  std::vector<double> v_exp, v_gauss;
};
LValueResult l_value_rankin(const FourierTable& f, const FourierTable& g,
                            const std::vector<double>& Ts, double target);

// E(X) = |sum_{n<=X} l5(n) - L1 * X| for the degree-5 coefficients l5,
// with L1 the fitted mean value; reports E(X)/X^{2/3}.
struct Gl5Report {
  std::vector<double> X, E, normalized;  // normalized = E / X^{2/3}
  double L1 = 0;
  double max_normalized = 0;
  bool monotone_growth = false;  // true would flag a failure trend
};
Gl5Report gl5_partial_sum_check(const std::vector<double>& l5,
                                const std::vector<double>& Xs, double L1);
// Convenience: convolves f x g and estimates L1 internally.
Gl5Report gl5_partial_sum_check(const FourierTable& f, const FourierTable& g,
                                const std::vector<double>& Xs);

// Stationary-phase control of int V2(xi) e^{i h(xi)} dxi with
// h(xi) = T xi log( n X (T xi / 2 pi e)^-5 ): stationary point
// xi0 = 2 pi (nX)^{1/5} / T, h(xi0) = 10 pi (nX)^{1/5}, h'' = -5T/xi.
struct XiReport {
  double xi0 = 0;
  cdouble integral{};
  cdouble leading{};
  double rel_defect = 0;
  bool outside_support = false;
};
XiReport xi_stationary_check(double n, double X, double T,
                             const SmoothWindow& V2);

}  // namespace oscsum
