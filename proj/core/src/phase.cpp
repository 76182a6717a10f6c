#include "oscsum/phase.hpp"

#include <algorithm>
#include <cmath>

#include "oscsum/errors.hpp"

namespace oscsum {

namespace {
// sample min of f over the open support of w
double sampled_min(const SmoothWindow& w, const std::function<double(double)>& f,
                   int npts = 2048) {
  double best = HUGE_VAL;
  for (int i = 0; i <= npts; ++i) {
    double y = w.a() + (w.b() - w.a()) * i / npts;
    if (w(y) <= 0.0) continue;
    best = std::min(best, f(y));
  }
  return best;
}
}  // namespace

NonStatReport nonstationary_decay_check(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho, const NonStatParams& prm, int A,
    double C_A) {
  if (!(prm.R > 0.0))
    throw HypothesisViolated("first-derivative test needs R > 0");
  double mind = sampled_min(w, [&](double y) { return std::abs(drho(y)); });
  if (mind < prm.R * (1.0 - 1e-9))
    throw HypothesisViolated("rho' drops below R on the support");
  cdouble I = oscillatory_integral([&w](double y) { return w(y); }, rho, drho,
                                   w.a(), w.b(), 1e-13);
  NonStatReport rep;
  rep.integral_abs = std::abs(I);
  rep.min_abs_dphase = mind;
  double base = prm.Y / (prm.R * prm.R * prm.Q * prm.Q) +
                1.0 / (prm.R * prm.Q) + 1.0 / (prm.R * prm.U);
  rep.bound = C_A * (w.b() - w.a()) * prm.Z * std::pow(base, A);
  rep.pass = rep.integral_abs <= rep.bound;
  return rep;
}

StationaryReport stationary_leading_term(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho,
    const std::function<double(double)>& d2rho) {
  const int npts = 2048;
  double a = w.a(), b = w.b();
  int nroots = 0;
  double ra = a, rb = b;
  int prev_sign = 0;
  double prev_y = a;
  for (int i = 0; i <= npts; ++i) {
    double y = a + (b - a) * i / npts;
    double cur = drho(y);
    int sign = cur > 0.0 ? 1 : (cur < 0.0 ? -1 : 0);
    if (sign != 0 && prev_sign != 0 && sign != prev_sign) {
      ++nroots;
      ra = prev_y;
      rb = y;
    }
    if (sign != 0) {
      prev_sign = sign;
      prev_y = y;
    }
  }
  if (nroots == 0) throw NoStationaryPoint("stationary_leading_term");
  if (nroots > 1) throw MultipleStationaryPoints("stationary_leading_term");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (ra + rb);
    if ((drho(ra) < 0.0) != (drho(mid) < 0.0))
      rb = mid;
    else
      ra = mid;
  }
  StationaryReport rep;
  rep.y0 = 0.5 * (ra + rb);
  double r2 = d2rho(rep.y0);
  if (r2 == 0.0) throw DegenerateSupport("stationary point is degenerate");
  rep.leading = w(rep.y0) * std::exp(cdouble{0.0, rho(rep.y0)}) *
                std::exp(cdouble{0.0, (r2 > 0 ? 1.0 : -1.0) * M_PI / 4.0}) *
                std::sqrt(2.0 * M_PI / std::abs(r2));
  rep.integral = oscillatory_integral([&w](double y) { return w(y); }, rho,
                                      drho, a, b, 1e-13);
  rep.rel_defect = std::abs(rep.integral - rep.leading) /
                   std::max(1e-300, std::abs(rep.leading));
  return rep;
}

SecondDerivReport second_derivative_bound_check(
    const SmoothWindow& w, const std::function<double(double)>& rho,
    const std::function<double(double)>& drho,
    const std::function<double(double)>& d2rho, double lambda0) {
  if (!(lambda0 > 0.0))
    throw HypothesisViolated("second-derivative test needs lambda0 > 0");
  double mind = sampled_min(w, d2rho);
  if (mind < lambda0 * (1.0 - 1e-9))
    throw HypothesisViolated("rho'' drops below lambda0 on the support");
  // V0 = total variation + sup of the weight
  const int npts = 8192;
  double var = 0.0, sup = 0.0, prev = w(w.a());
  for (int i = 1; i <= npts; ++i) {
    double y = w.a() + (w.b() - w.a()) * i / npts;
    double cur = w(y);
    var += std::abs(cur - prev);
    sup = std::max(sup, cur);
    prev = cur;
  }
  SecondDerivReport rep;
  rep.min_d2 = mind;
  cdouble I = oscillatory_integral([&w](double y) { return w(y); }, rho, drho,
                                   w.a(), w.b(), 1e-13);
  rep.integral_abs = std::abs(I);
  rep.bound = 8.0 * (var + sup) / std::sqrt(lambda0);
  rep.pass = rep.integral_abs <= rep.bound;
  return rep;
}

// ---------------------------------------------------------------------------

double PhaseContext::B() const { return 2.0 * std::sqrt(n * X) / (double)q; }
double PhaseContext::D() const { return 2.0 * std::sqrt(m * X) / (double)q; }

double PhaseContext::y_center() const {
  double c = phase.c(), bs = phase.beta_sub();
  return std::pow(c * t / D(), 1.0 / bs);
}

double PhaseContext::y_star() const {
  double c = phase.c(), bs = phase.beta_sub();
  double denom = D() - B();
  if (!(denom > 0.0) || !(c * t > 0.0))
    throw NoStationaryPoint("y_star: needs c t > 0 and D > B");
  return std::pow(c * t / denom, 1.0 / bs);
}

cdouble eval_paper_integral(const PhaseContext& ctx, PaperIntegral which,
                            double tol) {
  double qd = (double)ctx.q;
  double kQ = ctx.X / (qd * ctx.Q);
  OscIntegrand f;
  switch (which) {
    case PaperIntegral::Phi:
    case PaperIntegral::PhiPlus: {
      double sgn = which == PaperIntegral::Phi ? -1.0 : 1.0;
      double mX = ctx.m * ctx.X;
      f.amplitude = [&ctx](double y) {
        return cdouble{ctx.V(y) * std::pow(y, -0.25), 0.0};
      };
      f.phase = [&ctx, kQ, sgn, mX, qd](double y) {
        return 2.0 * M_PI * (ctx.t * ctx.phase.phi(y) + ctx.zeta * kQ * y +
                             sgn * 2.0 * std::sqrt(mX * y) / qd);
      };
      f.dphase = [&ctx, kQ, sgn, mX, qd](double y) {
        return 2.0 * M_PI * (ctx.t * ctx.phase.dphi(y) + ctx.zeta * kQ +
                             sgn * std::sqrt(mX / y) / qd);
      };
      return oscillatory_integral(f, ctx.V.a(), ctx.V.b(), tol);
    }
    case PaperIntegral::Psi: {
      double nX = ctx.n * ctx.X;
      f.amplitude = [&ctx](double y) {
        return cdouble{ctx.U(y) * std::pow(y, -0.25), 0.0};
      };
      f.phase = [&ctx, kQ, nX, qd](double y) {
        return 2.0 * M_PI * (-ctx.zeta * kQ * y + 2.0 * std::sqrt(nX * y) / qd);
      };
      f.dphase = [&ctx, kQ, nX, qd](double y) {
        return 2.0 * M_PI * (-ctx.zeta * kQ + std::sqrt(nX / y) / qd);
      };
      return oscillatory_integral(f, ctx.U.a(), ctx.U.b(), tol);
    }
    case PaperIntegral::K: {
      // outer variable y fixed, integration over the modulus dual zeta
      double ky = ctx.X * ctx.y / (qd * ctx.Q);
      double nQ = ctx.n * ctx.Q / qd;
      f.amplitude = [&ctx](double z) { return cdouble{ctx.U(z), 0.0}; };
      f.phase = [ky, nQ](double z) { return 2.0 * M_PI * (ky * z + nQ / z); };
      f.dphase = [ky, nQ](double z) {
        return 2.0 * M_PI * (ky - nQ / (z * z));
      };
      if (ctx.U.a() <= 0.0)
        throw DegenerateSupport("K: zeta window must avoid 0");
      return oscillatory_integral(f, ctx.U.a(), ctx.U.b(), tol);
    }
    case PaperIntegral::Ifrak:
      return eval_I_frak_quad(ctx, tol);
  }
  throw UsageError("eval_paper_integral: unknown integral");
}

cdouble eval_I_frak_quad(const PhaseContext& ctx, double tol) {
  // substituted form: y = u^2, Ifrak = int 2u V(u^2) e(t phi(u^2)+(B-D)u) du
  double BD = ctx.B() - ctx.D();
  OscIntegrand f;
  f.amplitude = [&ctx](double u) {
    return cdouble{2.0 * u * ctx.V(u * u), 0.0};
  };
  f.phase = [&ctx, BD](double u) {
    return 2.0 * M_PI * (ctx.t * ctx.phase.phi(u * u) + BD * u);
  };
  f.dphase = [&ctx, BD](double u) {
    return 2.0 * M_PI * (2.0 * u * ctx.t * ctx.phase.dphi(u * u) + BD);
  };
  return oscillatory_integral(f, std::sqrt(ctx.V.a()), std::sqrt(ctx.V.b()),
                              tol);
}

SeriesReport stationary_point_series(const PhaseContext& ctx, int terms) {
  double c = ctx.phase.c(), bs = ctx.phase.beta_sub();
  double B = ctx.B(), D = ctx.D();
  if (!(D > B)) throw NoStationaryPoint("stationary_point_series: D <= B");
  SeriesReport rep;
  // exact root of rho'(u) = c t u^-bs + B - D by bisection
  auto drho = [&](double u) { return c * ctx.t * std::pow(u, -bs) + B - D; };
  double y0 = ctx.y_center();
  double lo = y0 * 1e-3, hi = y0 * 1e3;
  if ((drho(lo) < 0) == (drho(hi) < 0))
    throw NoStationaryPoint("stationary_point_series: no sign change");
  for (int it = 0; it < 200; ++it) {
    double mid = std::sqrt(lo * hi);
    if ((drho(lo) < 0) != (drho(mid) < 0))
      hi = mid;
    else
      lo = mid;
  }
  rep.exact = 0.5 * (lo + hi);
  // y* = y0 (1 - B/D)^{-1/bs}: binomial series in powers of (B/D)
  double r = B / D, x = -1.0 / bs;
  double coef = 1.0, sum = 1.0, pw = 1.0;
  for (int j = 1; j <= terms; ++j) {
    coef *= (x - (j - 1)) / j;  // binomial(x, j)
    pw *= -r;
    sum += coef * pw;
  }
  rep.series = y0 * sum;
  rep.defect = std::abs(rep.exact - rep.series);
  return rep;
}

cdouble eval_I_star(const PhaseContext& ctx) {
  double c = ctx.phase.c(), bs = ctx.phase.beta_sub();
  double B = ctx.B(), D = ctx.D();
  if (!(D / ctx.t >= 0.25 && D / ctx.t <= 4.0))
    throw RegimeViolated("eval_I_star: needs D comparable to t");
  if (!(D > B)) throw NoStationaryPoint("eval_I_star: D <= B");
  double us = ctx.y_star(), u0 = ctx.y_center();
  double ulo = std::sqrt(ctx.V.a()), uhi = std::sqrt(ctx.V.b());
  if (us <= ulo || us >= uhi) return 0.0;  // point left the support
  double amp = 2.0 * us * ctx.V(us * us);
  double rho_s = ctx.t * ctx.phase.phi(us * us) + (B - D) * us;  // e-units
  double carrier = ctx.t * ctx.phase.phi(u0 * u0) - D * u0;
  double r2 = -bs * c * ctx.t * std::pow(us, -bs - 1.0);
  cdouble quarter =
      std::exp(cdouble{0.0, (r2 > 0 ? 1.0 : -1.0) * M_PI / 4.0});
  return amp * e_of(rho_s - carrier) * quarter / std::sqrt(std::abs(r2));
}

double i_star_phase_defect(const PhaseContext& ctx) {
  double c = ctx.phase.c(), bs = ctx.phase.beta_sub();
  double B = ctx.B();
  double u0 = ctx.y_center();
  cdouble Is = eval_I_star(ctx);
  if (std::abs(Is) == 0.0)
    throw StationaryOutsideSupport("i_star_phase_defect");
  double r2sgn = -bs * c * ctx.t > 0 ? 1.0 : -1.0;
  double actual =
      std::arg(Is * std::exp(cdouble{0.0, -r2sgn * M_PI / 4.0})) /
      (2.0 * M_PI);
  double predicted = B * u0 + u0 * u0 * B * B / (2.0 * c * bs * bs * ctx.t);
  double d = std::fmod(actual - predicted, 1.0);
  if (d < -0.5) d += 1.0;
  if (d > 0.5) d -= 1.0;
  return std::abs(d);
}

cdouble eval_H(double x, const HContext& hctx, double tol) {
  const PhaseContext& b = hctx.base;
  double c = b.phase.c(), bs = b.phase.beta_sub();
  double B1 = 2.0 * std::sqrt(hctx.n1 * b.X) / (double)b.q;
  double B2 = 2.0 * std::sqrt(hctx.n2 * b.X) / (double)b.q;
  OscIntegrand f;
  f.amplitude = [&](double xi) {
    PhaseContext c1 = b;
    c1.m = hctx.M * xi;
    c1.n = hctx.n1;
    PhaseContext c2 = c1;
    c2.n = hctx.n2;
    return hctx.omega(xi) * eval_I_star(c1) * std::conj(eval_I_star(c2));
  };
  f.phase = [x](double xi) { return -2.0 * M_PI * x * xi; };
  f.dphase = [&, x](double xi) {
    PhaseContext c1 = b;
    c1.m = hctx.M * xi;
    double u0 = std::pow(c * b.t / c1.D(), 1.0 / bs);
    return -2.0 * M_PI * (x + (B1 - B2) * u0 / (2.0 * bs * xi));
  };
  return oscillatory_integral(f, hctx.omega.a(), hctx.omega.b(), tol);
}

}  // namespace oscsum
