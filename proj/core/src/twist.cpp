#include "oscsum/twist.hpp"

#include <algorithm>
#include <cmath>

#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

namespace oscsum {

TwistSpec TwistSpec::make(const PhaseSpec& phase, double t, double X,
                          const SmoothWindow& window) {
  if (!(t > 0.0) || !(X > 0.0)) throw UsageError("TwistSpec: t, X must be > 0");
  TwistSpec s;
  s.phase = phase;
  s.t = t;
  s.X = X;
  s.window = window;
  s.in_regime =
      X > std::pow(t, 8.0 / 5.0) && X < std::pow(t, 12.0 / 5.0);
  s.window_sharp = window.delta() > 3.0 * std::sqrt(t) / std::log(t);
  return s;
}

cdouble eval_twist_sum(const FourierTable& f, const FourierTable& g,
                       const TwistSpec& spec) {
  double X = spec.X;
  std::size_t lo = (std::size_t)std::max(1.0, std::ceil(X * spec.window.a()));
  std::size_t hi = (std::size_t)std::floor(X * spec.window.b());
  if (hi > f.N || hi > g.N)
    throw RangeExceeded("eval_twist_sum: tables shorter than the support");
  return block_sum(lo, hi + 1, [&](std::size_t n) {
    double x = (double)n / X;
    return f[n] * g[n] * spec.window(x) * e_of(spec.t * spec.phase.phi(x));
  });
}

SharpSumResult eval_sharp_sum(const FourierTable& f, const FourierTable& g,
                              const PhaseSpec& phase, double t, double X) {
  SharpSumResult r;
  if (X < 1.0) return r;  // empty range
  std::size_t lo = (std::size_t)std::floor(X) + 1;
  std::size_t hi = (std::size_t)std::floor(2.0 * X);
  if (hi > f.N || hi > g.N)
    throw RangeExceeded("eval_sharp_sum: tables shorter than 2X");
  r.sharp = block_sum(lo, hi + 1, [&](std::size_t n) {
    return f[n] * g[n] * e_of(t * phase.phi((double)n / X));
  });
  double delta = std::max(4.0, std::sqrt(t) / std::log(std::max(t, 3.0)));
  TwistSpec spec = TwistSpec::make(phase, t, X, make_window(1.0, 2.0, delta));
  r.smoothed = eval_twist_sum(f, g, spec);
  r.defect = std::abs(r.sharp - r.smoothed);
  double band = X / delta;
  KahanSum<double> edges;
  for (std::size_t n = lo; n <= (std::size_t)(X + band) && n <= hi; ++n)
    edges.add(std::abs(f[n] * g[n]));
  for (std::size_t n = (std::size_t)std::ceil(2.0 * X - 2.0 * band); n <= hi;
       ++n)
    edges.add(std::abs(f[n] * g[n]));
  r.edge_bound = edges.value();
  return r;
}

HarnessReport theorem1_harness(const FourierTable& f, const FourierTable& g,
                               const PhaseSpec& phase,
                               const std::vector<double>& ts,
                               const std::vector<double>& Xs_exponents) {
  HarnessReport rep;
  for (double t : ts) {
    std::vector<double> lX, lC;
    for (double ex : Xs_exponents) {
      double X = std::pow(t, ex);
      TwistSpec spec = TwistSpec::make(phase, t, X, make_window(1.0, 2.0, 4.0));
      if (!spec.in_regime) continue;
      HarnessPoint pt;
      pt.t = t;
      pt.X = X;
      pt.in_regime = true;
      pt.S = eval_twist_sum(f, g, spec);
      pt.Cstar = std::abs(pt.S) / (std::pow(t, 0.4) * std::pow(X, 0.75));
      rep.max_Cstar = std::max(rep.max_Cstar, pt.Cstar);
      lX.push_back(std::log(X));
      lC.push_back(std::log(std::max(pt.Cstar, 1e-300)));
      rep.points.push_back(pt);
    }
    if (lX.size() >= 2) {
      // least-squares slope of log C* vs log X at this t
      double n = (double)lX.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < lX.size(); ++i) {
        sx += lX[i];
        sy += lC[i];
        sxx += lX[i] * lX[i];
        sxy += lX[i] * lC[i];
      }
      double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      rep.max_slope = std::max(rep.max_slope, slope);
    }
  }
  // Per-doubling growth of the 90th percentile of C*: split the pooled grid
  // at the median of log X, take the 90th percentile of C* in each half, and
  // normalize the ratio by the doubling count between the halves' geometric
  // mean X.  This is robust to the sqrt-cancellation noise of single points.
  if (rep.points.size() >= 4) {
    std::vector<const HarnessPoint*> sorted;
    for (const auto& pt : rep.points) sorted.push_back(&pt);
    std::sort(sorted.begin(), sorted.end(),
              [](const HarnessPoint* a, const HarnessPoint* b) {
                return a->X < b->X;
              });
    std::size_t half = sorted.size() / 2;
    auto p90_of = [](std::vector<const HarnessPoint*>::const_iterator lo,
                     std::vector<const HarnessPoint*>::const_iterator hi) {
      std::vector<double> c;
      double lx = 0;
      for (auto it = lo; it != hi; ++it) {
        c.push_back((*it)->Cstar);
        lx += std::log2((*it)->X);
      }
      std::sort(c.begin(), c.end());
      std::size_t idx = (std::size_t)std::floor(0.9 * (c.size() - 1));
      return std::pair<double, double>{c[idx], lx / (double)c.size()};
    };
    auto [p_lo, lx_lo] = p90_of(sorted.begin(), sorted.begin() + half);
    auto [p_hi, lx_hi] = p90_of(sorted.begin() + half, sorted.end());
    rep.p90_ratio = std::exp2(std::log2(p_hi / p_lo) / (lx_hi - lx_lo));
  }
  return rep;
}

cdouble dirichlet_polynomial(const FourierTable& f, const FourierTable& g,
                             double N, double t, const SmoothWindow& V) {
  std::size_t lo = (std::size_t)std::max(1.0, std::ceil(N * V.a()));
  std::size_t hi = (std::size_t)std::floor(N * V.b());
  if (hi > f.N || hi > g.N)
    throw RangeExceeded("dirichlet_polynomial: tables too short");
  return block_sum(lo, hi + 1, [&](std::size_t n) {
    double ph = -t * std::log((double)n) / (2.0 * M_PI);
    return f[n] * g[n] * V((double)n / N) * e_of(ph);
  });
}

DirichletReport dirichlet_sup(const FourierTable& f, const FourierTable& g,
                              double t) {
  DirichletReport rep;
  rep.t = t;
  SmoothWindow V = make_window(1.0, 2.0, 4.0);
  for (double N = 2.0; N <= t * t; N *= 2.0) {
    double v = std::abs(dirichlet_polynomial(f, g, N, t, V)) / std::sqrt(N);
    if (v > rep.sup_norm) {
      rep.sup_norm = v;
      rep.at_N = N;
    }
  }
  return rep;
}

GammaFactor GammaFactor::make(int k, int kappa) {
  if (k < kappa || kappa < 12 || k % 2 || kappa % 2)
    throw UsageError("GammaFactor: need even k >= kappa >= 12");
  GammaFactor gf;
  gf.k = k;
  gf.kappa = kappa;
  gf.shift[0] = 0.0;
  gf.shift[1] = (k - kappa) / 2.0;
  gf.shift[2] = (k - kappa) / 2.0 + 1.0;
  gf.shift[3] = (k + kappa) / 2.0 - 1.0;
  gf.shift[4] = (k + kappa) / 2.0;
  return gf;
}

cdouble gamma_factor(cdouble s, const GammaFactor& gf) {
  cdouble v = std::pow(cdouble{M_PI, 0.0}, -5.0 * (s - 0.5));
  for (double kj : gf.shift) {
    cdouble num = complex_gamma((s + kj) / 2.0);
    cdouble den;
    try {
      den = complex_gamma((1.0 - s + kj) / 2.0);
    } catch (const Pole&) {
      return 0.0;  // 1/Gamma vanishes there
    }
    v *= num / den;
  }
  return v;
}

LValueResult l_value_rankin(const FourierTable& f, const FourierTable& g,
                            const std::vector<double>& Ts, double target) {
  if (f.weight == g.weight)
    throw UsageError("l_value_rankin: forms must be distinct (pole at s=1)");
  if (Ts.size() < 2) throw UsageError("l_value_rankin: need >= 2 T values");
  double Tmax = *std::max_element(Ts.begin(), Ts.end());
  if ((double)std::min(f.N, g.N) < 25.0 * Tmax)
    throw RangeExceeded("l_value_rankin: tables shorter than the horizon");
  const double zeta2 = M_PI * M_PI / 6.0;
  LValueResult r;
  r.T = Ts;
  for (double T : Ts) {
    std::size_t hi = std::min(f.N, (std::size_t)(45.0 * T));
    // exponential family with the Mellin zero placed on the first error
    // pole: m(x) = 2 e^-x - e^-2x
    double ve = zeta2 * block_sum_real(1, hi + 1, [&](std::size_t n) {
                  double x = (double)n / T;
                  return f[n] * g[n] / (double)n *
                         (2.0 * std::exp(-x) - std::exp(-2.0 * x));
                });
    std::size_t hg = std::min(f.N, (std::size_t)(8.0 * T));
    double vg = zeta2 * block_sum_real(1, hg + 1, [&](std::size_t n) {
                  double x = (double)n / T;
                  return f[n] * g[n] / (double)n * std::exp(-x * x);
                });
    r.v_exp.push_back(ve);
    r.v_gauss.push_back(vg);
  }
  // residual error is ~T^-2 for both kernels; two-point fit on the last pair
  auto fit = [](const std::vector<double>& T, const std::vector<double>& v) {
    std::size_t k = T.size() - 1;
    double r2 = (T[k] / T[k - 1]) * (T[k] / T[k - 1]);
    return (r2 * v[k] - v[k - 1]) / (r2 - 1.0);
  };
  r.limit_exp = fit(Ts, r.v_exp);
  r.limit_gauss = fit(Ts, r.v_gauss);
  r.agreement = std::abs(r.limit_exp - r.limit_gauss);
  for (std::size_t i = 0; i + 1 < Ts.size(); ++i) {
    r.stability = std::max(r.stability,
                           std::abs(r.v_exp[i + 1] - r.v_exp[i]));
    r.stability = std::max(r.stability,
                           std::abs(r.v_gauss[i + 1] - r.v_gauss[i]));
  }
  if (r.stability > target)
    throw NotConverged("l_value_rankin: smoothing schedule not stable");
  r.value = 0.5 * (r.limit_exp + r.limit_gauss);
  return r;
}

Gl5Report gl5_partial_sum_check(const std::vector<double>& l5,
                                const std::vector<double>& Xs, double L1) {
  Gl5Report rep;
  rep.L1 = L1;
  double Xmax = *std::max_element(Xs.begin(), Xs.end());
  if ((double)l5.size() <= Xmax)
    throw RangeExceeded("gl5_partial_sum_check: coefficients too short");
  std::vector<double> sorted = Xs;
  std::sort(sorted.begin(), sorted.end());
  KahanSum<double> A;
  std::size_t n = 1;
  bool increasing = true;
  double prev_norm = -1.0;
  for (double X : sorted) {
    for (; (double)n <= X; ++n) A.add(l5[n]);
    double E = std::abs(A.value() - L1 * X);
    double norm = E / std::pow(X, 2.0 / 3.0);
    rep.X.push_back(X);
    rep.E.push_back(E);
    rep.normalized.push_back(norm);
    rep.max_normalized = std::max(rep.max_normalized, norm);
    if (norm <= prev_norm) increasing = false;
    prev_norm = norm;
  }
  rep.monotone_growth = increasing && Xs.size() >= 2;
  return rep;
}

Gl5Report gl5_partial_sum_check(const FourierTable& f, const FourierTable& g,
                                const std::vector<double>& Xs) {
  double L1 =
      l_value_rankin(f, g, {1e4, 4e4, 1.6e5}, 1e-4).value;
  double Xmax = *std::max_element(Xs.begin(), Xs.end());
  auto l5 = convolve_gl5(f, g, (std::size_t)Xmax + 1);
  return gl5_partial_sum_check(l5, Xs, L1);
}

XiReport xi_stationary_check(double n, double X, double T,
                             const SmoothWindow& V2) {
  if (!(n > 0.0) || !(X > 0.0) || !(T > 0.0))
    throw UsageError("xi_stationary_check: positive arguments required");
  XiReport rep;
  double nX = n * X;
  rep.xi0 = 2.0 * M_PI * std::pow(nX, 0.2) / T;
  auto h = [nX, T](double xi) {
    return T * xi * std::log(nX * std::pow(T * xi / (2.0 * M_PI * M_E), -5.0));
  };
  auto dh = [nX, T](double xi) {
    return T * (std::log(nX * std::pow(T * xi / (2.0 * M_PI * M_E), -5.0)) -
                5.0);
  };
  rep.integral = oscillatory_integral([&V2](double xi) { return V2(xi); }, h,
                                      dh, V2.a(), V2.b(), 1e-13);
  if (V2(rep.xi0) <= 0.0) {
    rep.outside_support = true;
    rep.leading = 0.0;
    rep.rel_defect = HUGE_VAL;
    return rep;
  }
  double h2 = 5.0 * T / rep.xi0;  // |h''(xi0)|, h'' itself negative
  rep.leading = V2(rep.xi0) * std::exp(cdouble{0.0, h(rep.xi0)}) *
                std::exp(cdouble{0.0, -M_PI / 4.0}) * std::sqrt(2.0 * M_PI / h2);
  rep.rel_defect = std::abs(rep.integral - rep.leading) / std::abs(rep.leading);
  return rep;
}

}  // namespace oscsum
