#include "oscsum/deltamethod.hpp"

#include <cmath>
#include <numeric>

#include "oscsum/arith.hpp"
#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

namespace oscsum {

DeltaScheme DeltaScheme::make(double Q, int shape_id) {
  if (Q < 8.0) throw DegenerateSupport("DeltaScheme: Q too small");
  DeltaScheme s;
  s.Q = Q;
  double a = Q / 2.0, b = Q;
  if (shape_id == 0) {
    s.shape = make_window_plateau(a, a + (b - a) / 4.0, b - (b - a) / 4.0, b);
  } else if (shape_id == 1) {
    s.shape = make_window_plateau(a, a + (b - a) / 3.0, b - (b - a) / 6.0, b);
  } else {
    throw DegenerateSupport("DeltaScheme: unknown shape_id");
  }
  s.norm = 1.0;
  double latt = s.lattice_sum();
  if (latt <= 0.0) throw DegenerateSupport("DeltaScheme: window misses the integers");
  s.norm = 1.0 / latt;
  return s;
}

double DeltaScheme::lattice_sum() const {
  KahanSum<double> acc;
  long long lo = (long long)std::floor(shape.a());
  long long hi = (long long)std::ceil(shape.b());
  for (long long m = std::max(1LL, lo); m <= hi; ++m) acc.add(w((double)m));
  return acc.value();
}

double DeltaScheme::integral_defect() const {
  auto amp = [this](double x) { return w(x); };
  cdouble I = oscillatory_integral(
      amp, [](double) { return 0.0; }, [](double) { return 0.0; }, shape.a(),
      shape.b(), 1e-12);
  return std::abs(I.real() - 1.0);
}

double delta_q_profile(const DeltaScheme& s, int q, double u) {
  // Delta_q(u) = sum_r (qr)^{-1} (w(qr) - w(|u|/(qr)))
  double au = std::abs(u);
  KahanSum<double> acc;
  int rmax = (int)(s.Q / q) + 8;
  // also cover radii where the second term is live: |u|/(qr) <= Q
  int rmax2 = (int)std::ceil(au / (q * s.Q * 0.5)) + 8;
  rmax = std::max(rmax, rmax2);
  for (int r = 1; r <= rmax; ++r) {
    double qr = (double)q * r;
    double term = (s.w(qr) - s.w(au / qr)) / qr;
    acc.add(term);
  }
  return acc.value();
}

namespace {
double dfi_delta_impl(long long n, const DeltaScheme& s, bool use_ramanujan) {
  if ((double)(n < 0 ? -n : n) > s.Q * s.Q / 4.0)
    throw RangeExceeded("dfi_delta: |n| beyond detection range Q^2/4");
  int qmax = (int)std::floor(s.Q) + 1;
  KahanSum<double> acc;
  for (int q = 1; q <= qmax; ++q) {
    double dq = delta_q_profile(s, q, (double)n);
    if (dq == 0.0) continue;
    double char_sum;
    if (use_ramanujan) {
      char_sum = (double)ramanujan_sum(n, (std::uint64_t)q);
    } else {
      KahanSum<double> cs;  // sum over a coprime to q of cos(2 pi a n / q)
      for (int a = 0; a < q; ++a) {
        if (std::gcd((unsigned)a, (unsigned)q) != 1 && q != 1) continue;
        double frac = (double)((long long)a * (n % q)) / q;
        cs.add(std::cos(2.0 * M_PI * frac));
      }
      char_sum = cs.value();
    }
    acc.add(char_sum * dq);
  }
  return acc.value();
}
}  // namespace

double dfi_delta(long long n, const DeltaScheme& s) {
  return dfi_delta_impl(n, s, false);
}
double dfi_delta_ramanujan(long long n, const DeltaScheme& s) {
  return dfi_delta_impl(n, s, true);
}

GReport g_properties_check(const DeltaScheme& s, int q,
                           const std::vector<double>& zetas) {
  if (q < 1 || (double)q > 2.0 * s.Q)
    throw RangeExceeded("g_properties_check: q outside (0, 2Q]");
  GReport rep;
  double qQ = q * s.Q;
  double vmax = s.Q / q + 2.0;  // Delta_q(qQ v) support: u <= Q^2
  for (double z : zetas) {
    // g = qQ * 2 * int_0^vmax Delta_q(qQ v) cos(2 pi zeta v) dv  (even in v)
    OscIntegrand f;
    f.amplitude = [&](double v) {
      return cdouble{delta_q_profile(s, q, qQ * v), 0.0};
    };
    f.phase = [z](double v) { return -2.0 * M_PI * z * v; };
    f.dphase = [z](double) { return -2.0 * M_PI * z; };
    cdouble half = oscillatory_integral(f, 0.0, vmax, 1e-11);
    cdouble g = qQ * 2.0 * cdouble{half.real(), 0.0};  // even part only
    rep.zeta.push_back(z);
    rep.g_re.push_back(g.real());
    rep.g_im.push_back(0.0);
  }
  return rep;
}

double poisson_congruence_check(const SmoothWindow& h, int d, double M, int r) {
  if (d < 1 || d > 10000) throw RangeExceeded("poisson_congruence_check: d");
  // direct side
  KahanSum<double> lhs;
  long long lo = (long long)std::floor(M * h.a()) - 1;
  long long hi = (long long)std::ceil(M * h.b()) + 1;
  long long m0 = lo + ((r - lo) % d + d) % d;  // first m >= lo with m = r (d)
  for (long long m = m0; m <= hi; m += d) lhs.add(h((double)m / M));
  // dual side
  auto hhat = [&](double xi) {
    OscIntegrand f;
    f.amplitude = [&h](double x) { return cdouble{h(x), 0.0}; };
    f.phase = [xi](double x) { return -2.0 * M_PI * xi * x; };
    f.dphase = [xi](double) { return -2.0 * M_PI * xi; };
    return oscillatory_integral(f, h.a(), h.b(), 1e-12);
  };
  KahanSum<cdouble> rhs;
  rhs.add((M / d) * hhat(0.0));
  int quiet = 0;
  for (int mt = 1; mt < 100000; ++mt) {
    double xi = mt * M / d;
    cdouble hp = hhat(xi), hm = hhat(-xi);
    cdouble term = e_of((double)mt * r / d) * hp + e_of(-(double)mt * r / d) * hm;
    rhs.add((M / d) * term);
    if (std::abs(hp) + std::abs(hm) < 1e-13) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  return std::abs(lhs.value() - rhs.value());
}

}  // namespace oscsum
