#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "oscsum/quad.hpp"

namespace oscsum {

// ---------------------------------------------------------------------------
// Raw lemma checkers.  Phases here are in RADIANS (I = int w e^{i rho}); the
// named-integral evaluators further down use e()-units phases throughout.
// ---------------------------------------------------------------------------

// First-derivative (non-stationary) bound: w^(j) << Z/U^j on supp w,
// rho' >= R there, rho^(j) << Y/Q^j for j >= 2.  Then
//   |I| <= C_A (b-a) Z (Y/(R^2 Q^2) + 1/(RQ) + 1/(RU))^A.
struct NonStatParams {
  double Q = 1, U = 1, Y = 1, Z = 1, R = 1;
};
struct NonStatReport {
  double integral_abs = 0;
  double bound = 0;
  double min_abs_dphase = 0;
  bool pass = false;
};
NonStatReport nonstationary_decay_check(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho, const NonStatParams& prm, int A,
    double C_A = 10.0);

// Unique stationary point: quadrature value against the leading term
//   w(y0) e^{i rho(y0) + i sgn(rho'') pi/4} sqrt(2 pi / |rho''(y0)|).
struct StationaryReport {
  double y0 = 0;             // root of rho', refined by bisection
  cdouble integral{};        // quadrature value
  cdouble leading{};         // stationary-phase leading term
  double rel_defect = 0;     // |integral - leading| / |leading|
};
StationaryReport stationary_leading_term(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho,
    const std::function<double(double)>& d2rho);

// Second-derivative (van der Corput) bound |I| <= 8 V0 / sqrt(lambda0) with
// V0 = Var(w) + sup(w); requires rho'' >= lambda0 on supp w.
struct SecondDerivReport {
  double integral_abs = 0;
  double bound = 0;
  double min_d2 = 0;
  bool pass = false;
};
SecondDerivReport second_derivative_bound_check(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho,
    const std::function<double(double)>& d2rho, double lambda0);

// ---------------------------------------------------------------------------
// The named oscillatory integrals of the twisted-sum analysis.  All phases in
// e()-units.
// ---------------------------------------------------------------------------

struct PhaseContext {
  PhaseSpec phase;
  double t = 1;
  double X = 1;
  std::uint64_t q = 1;
  double Q = 1;       // delta-method modulus scale
  double zeta = 0;    // dual variable of the delta-method weight
  double m = 1;       // dual frequency on the f-side (may be continuous)
  double n = 1;       // dual frequency on the g-side
  double y = 1;       // fixed outer variable of the kernel K
  SmoothWindow V;     // y-window of Phi / Ifrak
  SmoothWindow U;     // y-window of Psi / zeta-window of K

  double B() const;   // 2 sqrt(n X) / q
  double D() const;   // 2 sqrt(m X) / q
  double y_center() const;  // y0 = (c t / D)^(1 / beta_sub)
  double y_star() const;    // root of c t u^-beta_sub + B - D
};

enum class PaperIntegral { Phi, PhiPlus, Psi, K, Ifrak };
cdouble eval_paper_integral(const PhaseContext& ctx, PaperIntegral which,
                            double tol = 1e-10);

// y* as a truncated binomial series around y0 in powers of B/D, against the
// bisection root of rho'.
struct SeriesReport {
  double exact = 0;
  double series = 0;
  double defect = 0;
};
SeriesReport stationary_point_series(const PhaseContext& ctx, int terms);

// Stationary-phase evaluation of Ifrak after y = u^2, with the carrier
// e(t phi(y0^2) - D y0) removed:  Ifrak ~ e(t phi(y0^2) - D y0) * Istar.
cdouble eval_I_star(const PhaseContext& ctx);
// Quadrature value of Ifrak itself (substituted form), for comparison.
cdouble eval_I_frak_quad(const PhaseContext& ctx, double tol = 1e-10);
// Second-order phase model of Istar: arg ~ 2 pi (B y0 + y0^2 B^2/(2 c beta^2 t))
// plus the fixed -pi/4; returns the principal-value mismatch in e()-units.
double i_star_phase_defect(const PhaseContext& ctx);

// H(x) = int omega(xi) Istar(M xi, n1) conj(Istar(M xi, n2)) e(-x xi) dxi.
struct HContext {
  PhaseContext base;  // base.m is overwritten by M*xi as xi runs
  double M = 1;       // scale of the first argument
  double n1 = 1, n2 = 1;
  SmoothWindow omega;  // xi-window
};
cdouble eval_H(double x, const HContext& hctx, double tol = 1e-9);

}  // namespace oscsum
