#pragma once
#include <complex>
#include <functional>

namespace oscsum {

using cdouble = std::complex<double>;

// e(x) = exp(2*pi*i*x), the additive character used throughout.
cdouble e_of(double x);

// C-infinity bump: 0 outside [a,b], 1 on the plateau [p1,p2], glued with the
// exp(-1/(u(1-u)))-type transition on each side.
class SmoothWindow {
 public:
  SmoothWindow() = default;
  SmoothWindow(double a, double p1, double p2, double b);

  double operator()(double x) const;
  double a() const { return a_; }
  double b() const { return b_; }
  double plateau_lo() const { return p1_; }
  double plateau_hi() const { return p2_; }
  // sharpness: reciprocal of the narrower transition width
  double delta() const;

 private:
  double a_ = 0, p1_ = 0, p2_ = 1, b_ = 1;
};

// Window that is 1 on [a+1/delta, b-1/delta], 0 outside [a,b].
SmoothWindow make_window(double a, double b, double delta);
// Window with explicitly placed plateau (asymmetric transitions allowed).
SmoothWindow make_window_plateau(double a, double p1, double p2, double b);

// Twist phase phi(x) = alpha*log(x) or alpha*x^beta, with the derivatives the
// stationary-phase machinery needs.  After substituting x = y^2 the derivative
// normalizes to (phi(y^2))' = c * y^(-beta_sub); beta = 1/2 and 3/4 are
// excluded because they make beta_sub degenerate (0 and -1/2).
struct PhaseSpec {
  enum class Kind { Log, Power };
  Kind kind = Kind::Log;
  double alpha = 1.0;
  double beta = 0.0;  // Power kind only, in (0,1) minus {1/2, 3/4}

  static PhaseSpec log_phase(double alpha);
  static PhaseSpec power_phase(double alpha, double beta);

  double phi(double x) const;
  double dphi(double x) const;
  double d2phi(double x) const;

  double c() const;         // log: 2*alpha ; power: 2*alpha*beta
  double beta_sub() const;  // log: 1 ; power: 1 - 2*beta
};

// J_n(x) for integer n in [0, 64], x in [0, 1e4]; relative error (against the
// oscillation envelope) about 1e-13.  Power series for small x, Hankel
// asymptotics for large x, Miller backward recurrence in between.
double bessel_j(int order, double x);

// Gamma(z) by Lanczos approximation (reflection for Re z < 1/2).
cdouble complex_gamma(cdouble z);

// Adaptive oscillatory quadrature: integral of amplitude(y)*exp(i*phase(y))
// over [a,b].  Panels are split until width <= 1/(4 * local cycles-per-unit)
// and a Gauss-Legendre 16 vs. bisected-pair comparison meets the tolerance.
// dphase drives the frequency budget; pass nullptr to rely on splitting alone.
struct OscIntegrand {
  std::function<cdouble(double)> amplitude;  // may be complex-valued
  std::function<double(double)> phase;       // radians
  std::function<double(double)> dphase;      // radians per unit length, optional
};
cdouble oscillatory_integral(const OscIntegrand& f, double a, double b,
                             double target_tol);

// Convenience wrapper for real amplitudes.
cdouble oscillatory_integral(const std::function<double(double)>& amplitude,
                             const std::function<double(double)>& phase,
                             const std::function<double(double)>& dphase,
                             double a, double b, double target_tol);

// Mellin transform of a window: integral of W(x) x^(s-1) dx.
cdouble mellin_transform(const SmoothWindow& W, cdouble s, double tol = 1e-10);

}  // namespace oscsum
