#include "oscsum/quad.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

namespace oscsum {

cdouble e_of(double x) {
  double th = 2.0 * M_PI * x;
  return {std::cos(th), std::sin(th)};
}

// ---------------------------------------------------------------------------
// windows

namespace {
// transition profile: 0 at u<=0, 1 at u>=1, C-infinity, built from the
// exp(-1/u) bump pair; equals 1/(1+exp(1/u - 1/(1-u)))
double bump_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double r = 1.0 / u - 1.0 / (1.0 - u);
  if (r > 700.0) return 0.0;
  if (r < -700.0) return 1.0;
  return 1.0 / (1.0 + std::exp(r));
}
}  // namespace

SmoothWindow::SmoothWindow(double a, double p1, double p2, double b)
    : a_(a), p1_(p1), p2_(p2), b_(b) {
  if (!(a < p1 && p1 <= p2 && p2 < b))
    throw DegenerateSupport("window needs a < p1 <= p2 < b");
}

double SmoothWindow::operator()(double x) const {
  if (x <= a_ || x >= b_) return 0.0;
  if (x < p1_) return bump_step((x - a_) / (p1_ - a_));
  if (x > p2_) return bump_step((b_ - x) / (b_ - p2_));
  return 1.0;
}

double SmoothWindow::delta() const {
  return 1.0 / std::min(p1_ - a_, b_ - p2_);
}

SmoothWindow make_window(double a, double b, double delta) {
  if (!(a < b) || delta < 1.0 || delta * (b - a) < 4.0)
    throw DegenerateSupport("make_window: need a < b, delta >= 1, delta*(b-a) >= 4");
  return SmoothWindow(a, a + 1.0 / delta, b - 1.0 / delta, b);
}

SmoothWindow make_window_plateau(double a, double p1, double p2, double b) {
  return SmoothWindow(a, p1, p2, b);
}

// ---------------------------------------------------------------------------
// phases

PhaseSpec PhaseSpec::log_phase(double alpha) {
  if (alpha == 0.0) throw HypothesisViolated("phase: alpha = 0");
  PhaseSpec p;
  p.kind = Kind::Log;
  p.alpha = alpha;
  return p;
}

PhaseSpec PhaseSpec::power_phase(double alpha, double beta) {
  if (alpha == 0.0) throw HypothesisViolated("phase: alpha = 0");
  if (!(beta > 0.0 && beta < 1.0) || beta == 0.5 || beta == 0.75)
    throw HypothesisViolated("phase: beta must lie in (0,1) minus {1/2, 3/4}");
  PhaseSpec p;
  p.kind = Kind::Power;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

double PhaseSpec::phi(double x) const {
  return kind == Kind::Log ? alpha * std::log(x) : alpha * std::pow(x, beta);
}
double PhaseSpec::dphi(double x) const {
  return kind == Kind::Log ? alpha / x : alpha * beta * std::pow(x, beta - 1.0);
}
double PhaseSpec::d2phi(double x) const {
  return kind == Kind::Log ? -alpha / (x * x)
                           : alpha * beta * (beta - 1.0) * std::pow(x, beta - 2.0);
}
double PhaseSpec::c() const {
  return kind == Kind::Log ? 2.0 * alpha : 2.0 * alpha * beta;
}
double PhaseSpec::beta_sub() const {
  return kind == Kind::Log ? 1.0 : 1.0 - 2.0 * beta;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre 16 (nodes computed once by Newton on P16; avoids hand-typed
// constants)

namespace {
struct GL16 {
  std::array<double, 16> x{}, w{};
  GL16() {
    const int n = 16;
    for (int i = 0; i < n; ++i) {
      double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = xi;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
        double step = p1 / dp;
        xi -= step;
        if (std::abs(step) < 1e-16) break;
      }
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      x[i] = xi;
      w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
  }
};
const GL16 g_gl16;

cdouble gl16_panel(const OscIntegrand& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanSum<cdouble> acc;
  for (int i = 0; i < 16; ++i) {
    double y = mid + half * g_gl16.x[i];
    cdouble amp = f.amplitude(y);
    if (amp == cdouble{}) continue;
    double th = f.phase(y);
    acc.add(g_gl16.w[i] * amp * cdouble{std::cos(th), std::sin(th)});
  }
  return half * acc.value();
}
}  // namespace

cdouble oscillatory_integral(const OscIntegrand& f, double a, double b,
                             double target_tol) {
  if (!(b > a)) return {};
  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> stack{{a, b, 0}};
  KahanSum<cdouble> total;
  long long budget = 100000000;  // panel evaluations
  const double span = b - a;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    if (--budget < 0) throw BudgetExceeded("oscillatory_integral panel budget");
    double w = p.b - p.a;
    double m = 0.5 * (p.a + p.b);
    // frequency budget: keep at most a quarter cycle of slack per panel
    if (f.dphase && p.depth < 60) {
      double fr = std::max({std::abs(f.dphase(p.a)), std::abs(f.dphase(m)),
                            std::abs(f.dphase(p.b))}) /
                  (2.0 * M_PI);
      if (w * fr > 0.25 && w > 1e-13 * span) {
        stack.push_back({m, p.b, p.depth + 1});
        stack.push_back({p.a, m, p.depth + 1});
        continue;
      }
    }
    cdouble q1 = gl16_panel(f, p.a, p.b);
    cdouble q2 = gl16_panel(f, p.a, m) + gl16_panel(f, m, p.b);
    double err = std::abs(q1 - q2);
    double tol_local = target_tol * std::max(w / span, 1e-6);
    if (err <= tol_local || p.depth >= 48 || w <= 1e-13 * span) {
      total.add(q2);
    } else {
      stack.push_back({m, p.b, p.depth + 1});
      stack.push_back({p.a, m, p.depth + 1});
    }
  }
  return total.value();
}

cdouble oscillatory_integral(const std::function<double(double)>& amplitude,
                             const std::function<double(double)>& phase,
                             const std::function<double(double)>& dphase,
                             double a, double b, double target_tol) {
  OscIntegrand f;
  f.amplitude = [&amplitude](double y) { return cdouble{amplitude(y), 0.0}; };
  f.phase = phase;
  f.dphase = dphase;
  return oscillatory_integral(f, a, b, target_tol);
}

// ---------------------------------------------------------------------------
// Bessel J_n

namespace {
double bessel_series(int nu, double x) {
  long double hx = 0.5L * x;
  long double t = 1.0L;
  for (int k = 1; k <= nu; ++k) t *= hx / k;
  long double sum = 0.0L, term = t;
  for (int m = 0; m < 400; ++m) {
    sum += term;
    term *= -(hx * hx) / ((long double)(m + 1) * (m + 1 + nu));
    if (std::abs((double)term) < 1e-25) break;
  }
  return (double)sum;
}

bool bessel_hankel(int nu, double x, double* out) {
  long double mu = 4.0L * nu * nu;
  long double inv8x = 1.0L / (8.0L * x);
  long double P = 1.0L, Q = 0.0L;
  long double t = 1.0L, prev = 1e30L;
  for (int k = 1; k <= 60; ++k) {
    long double num = mu - (long double)(2 * k - 1) * (2 * k - 1);
    t *= num * inv8x / k;
    if (std::abs((double)t) >= std::abs((double)prev)) {
      if (std::abs((double)prev) > 1e-13) return false;  // diverging too early
      break;
    }
    int phase = (k % 4);  // cycle of signs: Q+, P-, Q-, P+
    switch (phase) {
      case 1: Q += t; break;
      case 2: P -= t; break;
      case 3: Q -= t; break;
      case 0: P += t; break;
    }
    prev = t;
    if (std::abs((double)t) < 1e-19) break;
  }
  long double chi = (long double)x - nu * (M_PIl / 2.0L) - M_PIl / 4.0L;
  long double val =
      std::sqrt(2.0L / (M_PIl * (long double)x)) * (std::cos(chi) * P - std::sin(chi) * Q);
  *out = (double)val;
  return true;
}

double bessel_miller(int nu, double x) {
  int M = (int)std::max<double>(nu, x) + 20 +
          (int)(1.3 * std::sqrt(std::max<double>(nu, x)) * 10.0);
  if (M % 2) ++M;
  long double jp1 = 0.0L, j = 1e-30L, norm = 0.0L, result = 0.0L;
  for (int k = M; k >= 1; --k) {
    long double jm1 = (2.0L * k / x) * j - jp1;
    jp1 = j;
    j = jm1;
    if (k - 1 == nu) result = j;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? j : 2.0L * j;
    if (std::abs((double)j) > 1e270) {
      j *= 1e-270L;
      jp1 *= 1e-270L;
      norm *= 1e-270L;
      result *= 1e-270L;
    }
  }
  return (double)(result / norm);
}
}  // namespace

double bessel_j(int order, double x) {
  if (order < 0 || order > 64) throw RangeExceeded("bessel_j: order outside [0,64]");
  if (x < 0.0) throw RangeExceeded("bessel_j: x < 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 18.0) return bessel_series(order, x);
  if (x >= 18.0 + 0.6 * order * order) {
    double v;
    if (bessel_hankel(order, x, &v)) return v;
  }
  return bessel_miller(order, x);
}

// ---------------------------------------------------------------------------
// complex Gamma (Lanczos, g = 7, 9 terms)

cdouble complex_gamma(cdouble z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw Pole("complex_gamma at nonpositive integer");
  static const double g = 7.0;
  static const double c[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) * Gamma(1-z))
    cdouble s = std::sin(M_PI * z);
    if (s == cdouble{}) throw Pole("complex_gamma reflection pole");
    return M_PI / (s * complex_gamma(1.0 - z));
  }
  cdouble zz = z - 1.0;
  cdouble x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (zz + (double)i);
  cdouble t = zz + g + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, zz + 0.5) * std::exp(-t) * x;
}

// ---------------------------------------------------------------------------
// Mellin transform

cdouble mellin_transform(const SmoothWindow& W, cdouble s, double tol) {
  if (W.a() <= 0.0)
    throw DegenerateSupport("mellin_transform: window must live in (0,inf)");
  double sigma = s.real(), tau = s.imag();
  OscIntegrand f;
  f.amplitude = [&W, sigma](double x) {
    double v = W(x);
    return cdouble{v == 0.0 ? 0.0 : v * std::pow(x, sigma - 1.0), 0.0};
  };
  f.phase = [tau](double x) { return tau * std::log(x); };
  f.dphase = [tau](double x) { return tau / x; };
  return oscillatory_integral(f, W.a(), W.b(), tol);
}

}  // namespace oscsum
