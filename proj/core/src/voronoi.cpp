#include "oscsum/voronoi.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "oscsum/arith.hpp"
#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

namespace oscsum {

namespace {
// i^kappa for integer kappa
cdouble i_pow(int kappa) {
  static const cdouble tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return tab[((kappa % 4) + 4) % 4];
}

// Hankel-series coefficients a_j(nu) and the attached c_j, d_j of the
// expansion Phi(x) = x^{-1/4} sum_j x^{-j/2} (c_j A_j(x) + d_j conj A_j(x)),
// A_j(x) = int h(y) y^{-1/4 - j/2} e(2 sqrt(xy)) dy.
void hankel_coeffs(int kappa, int J, std::vector<cdouble>& cj,
                   std::vector<cdouble>& dj) {
  int nu = kappa - 1;
  std::vector<double> aj(J + 1);
  aj[0] = 1.0;
  for (int j = 1; j <= J; ++j)
    aj[j] = aj[j - 1] * (4.0 * nu * nu - (2.0 * j - 1) * (2.0 * j - 1)) /
            (8.0 * j);
  cdouble E = std::exp(cdouble{0.0, -(nu * M_PI / 2.0 + M_PI / 4.0)});
  cdouble pre = i_pow(kappa) / std::sqrt(2.0);
  cj.resize(J + 1);
  dj.resize(J + 1);
  for (int j = 0; j <= J; ++j) {
    double scale = aj[j] * std::pow(4.0 * M_PI, -j);
    cj[j] = pre * i_pow(j) * scale * E;
    dj[j] = pre * i_pow(-j) * scale * std::conj(E);
  }
}

// Tables of G_j(f) = int ghat_j(u) e(f u) du, where after y = u^2/4 the
// oscillatory factor of A_j becomes e(sqrt(x) u):
//   ghat_j(u) = (u/2) (u^2/4)^{-1/4 - j/2} h(u^2/4),  A_j(x) = G_j(sqrt(x)).
// One FFT per j; the carrier e(f uc) is split off so the stored samples are
// slowly varying and safe to interpolate cubically.
struct GTables {
  double df = 0.0, fmax = 0.0, uc = 0.0;
  int J = 0;
  std::vector<std::vector<cdouble>> S;  // S[j][k] = G_j(k*df) * e(-k*df*uc)
};

constexpr int kPhiJ = 8;           // expansion depth
constexpr double kPhiSwitch = 300.0;  // quadrature below, tables above
constexpr double kPhiXEnd = 2.2e4;    // tables cover sqrt(x) <= ~148

GTables build_gtables(const SmoothWindow& h) {
  GTables g;
  const double U = 256.0;        // period: f-resolution 1/U
  const std::size_t M = 1 << 22; // alias frequency M/U is deep in the tail
  g.df = 1.0 / U;
  g.fmax = std::sqrt(kPhiXEnd) + 2.0;
  g.J = kPhiJ;
  double ua = 2.0 * std::sqrt(h.a()), ub = 2.0 * std::sqrt(h.b());
  g.uc = 0.5 * (ua + ub);
  std::size_t kmax = (std::size_t)(g.fmax / g.df) + 8;
  std::vector<double> in(M);
  std::vector<cdouble> out(M / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      (int)M, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
      FFTW_ESTIMATE);
  double du = U / (double)M;
  g.S.resize(g.J + 1);
  for (int j = 0; j <= g.J; ++j) {
    std::size_t m_lo = (std::size_t)(ua / du), m_hi = (std::size_t)(ub / du) + 2;
    std::fill(in.begin(), in.end(), 0.0);
    for (std::size_t m = m_lo; m <= m_hi && m < M; ++m) {
      double u = m * du, y = u * u / 4.0;
      in[m] = (u / 2.0) * std::pow(y, -0.25 - 0.5 * j) * h(y) * du;
    }
    fftw_execute(plan);
    g.S[j].resize(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) {
      // r2c uses e(-fu); conjugate for the e(+fu) convention, then remove
      // the carrier
      cdouble G = std::conj(out[k]);
      g.S[j][k] = G * e_of(-(double)k * g.df * g.uc);
    }
  }
  fftw_destroy_plan(plan);
  return g;
}

cdouble eval_gj(const GTables& g, int j, double f) {
  double s = f / g.df;
  std::size_t k1 = (std::size_t)s;
  if (k1 == 0) k1 = 1;
  if (k1 + 2 >= g.S[j].size())
    throw RangeExceeded("phi table: frequency beyond table");
  double t = s - (double)k1;
  const auto& S = g.S[j];
  // 4-point Lagrange at k1-1 .. k1+2
  double w0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  double w1 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  double w2 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  double w3 = (t + 1.0) * t * (t - 1.0) / 6.0;
  cdouble Sf = w0 * S[k1 - 1] + w1 * S[k1] + w2 * S[k1 + 1] + w3 * S[k1 + 2];
  return Sf * e_of(f * g.uc);
}

std::mutex g_gtab_mutex;
std::map<std::tuple<double, double, double, double>, GTables> g_gtab_cache;

const GTables& gtables_for(const SmoothWindow& h) {
  std::lock_guard<std::mutex> lock(g_gtab_mutex);
  auto key = std::make_tuple(h.a(), h.plateau_lo(), h.plateau_hi(), h.b());
  auto it = g_gtab_cache.find(key);
  if (it == g_gtab_cache.end())
    it = g_gtab_cache.emplace(key, build_gtables(h)).first;
  return it->second;
}

cdouble phi_from_tables(const GTables& g, const std::vector<cdouble>& cj,
                        const std::vector<cdouble>& dj, double x) {
  double f = std::sqrt(x);
  cdouble acc = 0.0;
  double xs = 1.0;
  for (int j = 0; j <= g.J; ++j) {
    cdouble A = eval_gj(g, j, f);
    acc += xs * (cj[j] * A + dj[j] * std::conj(A));
    xs /= f;
  }
  return std::pow(x, -0.25) * acc;
}
}  // namespace

cdouble phi_h_exact(double x, const SmoothWindow& h, int kappa, double tol) {
  if (x < 0.0) throw RangeExceeded("phi_h_exact: x < 0");
  int nu = kappa - 1;
  OscIntegrand f;
  f.amplitude = [&h, x, nu](double y) {
    return cdouble{h(y) * bessel_j(nu, 4.0 * M_PI * std::sqrt(x * y)), 0.0};
  };
  f.phase = [](double) { return 0.0; };
  // the oscillation lives in the Bessel factor; feed its local frequency
  // d/dy [4 pi sqrt(xy)] = 2 pi sqrt(x/y) to the panel budget
  f.dphase = [x](double y) { return 2.0 * M_PI * std::sqrt(x / std::max(y, 1e-300)); };
  cdouble I = oscillatory_integral(f, h.a(), h.b(), tol);
  return 2.0 * M_PI * i_pow(kappa) * I;
}

cdouble phi_h_asymptotic(double x, const SmoothWindow& h, int kappa, int J,
                         double tol) {
  if (x <= 0.0) throw RangeExceeded("phi_h_asymptotic: x <= 0");
  if (J < 0 || J > 12) throw RangeExceeded("phi_h_asymptotic: J out of range");
  int nu = kappa - 1;
  // a_j(nu) from the Hankel expansion of J_nu
  std::vector<double> aj(J + 1);
  aj[0] = 1.0;
  for (int j = 1; j <= J; ++j)
    aj[j] = aj[j - 1] * (4.0 * nu * nu - (2.0 * j - 1) * (2.0 * j - 1)) /
            (8.0 * j);
  cdouble E = std::exp(cdouble{0.0, -(nu * M_PI / 2.0 + M_PI / 4.0)});
  cdouble pre = i_pow(kappa) / std::sqrt(2.0);
  std::vector<cdouble> cj(J + 1), dj(J + 1);
  for (int j = 0; j <= J; ++j) {
    double scale = aj[j] * std::pow(4.0 * M_PI, -j);
    cj[j] = pre * i_pow(j) * scale * E;
    dj[j] = pre * i_pow(-j) * scale * std::conj(E);
  }
  auto series = [&](const std::vector<cdouble>& coef, double y) {
    cdouble s = 0.0;
    double xy = x * y, f = 1.0;
    for (int j = 0; j <= J; ++j) {
      s += coef[j] * f;
      f /= std::sqrt(xy);
    }
    return s;
  };
  OscIntegrand fp, fm;
  fp.amplitude = [&](double y) {
    return h(y) * std::pow(y, -0.25) * series(cj, y);
  };
  fp.phase = [x](double y) { return 4.0 * M_PI * std::sqrt(x * y); };
  fp.dphase = [x](double y) { return 2.0 * M_PI * std::sqrt(x / y); };
  fm.amplitude = [&](double y) {
    return h(y) * std::pow(y, -0.25) * series(dj, y);
  };
  fm.phase = [x](double y) { return -4.0 * M_PI * std::sqrt(x * y); };
  fm.dphase = [x](double y) { return -2.0 * M_PI * std::sqrt(x / y); };
  cdouble Ip = oscillatory_integral(fp, h.a(), h.b(), tol);
  cdouble Im = oscillatory_integral(fm, h.a(), h.b(), tol);
  return std::pow(x, -0.25) * (Ip + Im);
}

PhiCache build_phi_cache(const FourierTable& form, std::uint64_t q, double X,
                         const SmoothWindow& h, double tol) {
  PhiCache cache;
  cache.q = q;
  cache.X = X;
  cache.kappa = form.weight;
  cache.phi.push_back(0.0);  // index 0 unused
  const GTables& g = gtables_for(h);
  std::vector<cdouble> cj, dj;
  hankel_coeffs(form.weight, kPhiJ, cj, dj);
  double scale = X / q;  // prefactor of the dual sum
  int quiet = 0;
  for (std::size_t n = 1;; ++n) {
    double x = n * X / (double)(q * q);
    if (x > kPhiXEnd) return cache;  // beyond the tables Phi is ~1e-13
    cdouble v = x < kPhiSwitch ? phi_h_exact(x, h, form.weight, tol)
                               : phi_from_tables(g, cj, dj, x);
    cache.phi.push_back(v);
    if (scale * std::abs(v) < 1e-13)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 30 && n >= 8) return cache;
    if (n >= form.N)
      throw RangeExceeded("build_phi_cache: lambda table shorter than dual sum");
  }
}

VoronoiSides voronoi_sides(const VoronoiInstance& inst, const PhiCache* cache) {
  const FourierTable& F = *inst.form;
  std::uint64_t q = inst.q, a = inst.a % q;
  if (std::gcd(a == 0 ? q : a, q) != 1 && q != 1)
    throw NonInvertible("voronoi_sides: gcd(a, q) != 1");
  double X = inst.X;
  std::size_t lo = (std::size_t)std::max(1.0, std::ceil(X * inst.h.a()));
  std::size_t hi = (std::size_t)std::floor(X * inst.h.b());
  if (hi > F.N) throw RangeExceeded("voronoi_sides: direct sum beyond table");
  cdouble lhs = block_sum(lo, hi + 1, [&](std::size_t n) {
    double frac = (double)((a * (n % q)) % q) / (double)q;
    return F[n] * inst.h((double)n / X) * e_of(frac);
  });

  PhiCache local;
  const PhiCache* pc = cache;
  if (!pc) {
    local = build_phi_cache(F, q, X, inst.h);
    pc = &local;
  }
  std::uint64_t abar = mod_inverse(a == 0 ? 1 : a, q);
  KahanSum<cdouble> rhs_acc;
  for (std::size_t n = 1; n < pc->phi.size(); ++n) {
    double frac = (double)((abar * (n % q)) % q) / (double)q;
    rhs_acc.add(F[n] * e_of(-frac) * pc->phi[n]);
  }
  cdouble rhs = (X / (double)q) * rhs_acc.value();
  return {lhs, rhs, std::abs(lhs - rhs)};
}

ResonanceResult resonance_sum(const FourierTable& form, std::uint64_t q,
                              double X, const SmoothWindow& V) {
  if (q < 1 || q > form.N)
    throw RangeExceeded("resonance_sum: q outside the lambda table");
  std::size_t lo = (std::size_t)std::max(1.0, std::ceil(X * V.a()));
  std::size_t hi = (std::size_t)std::floor(X * V.b());
  if (hi > form.N) throw RangeExceeded("resonance_sum: sum beyond table");
  cdouble S = block_sum(lo, hi + 1, [&](std::size_t n) {
    return form[n] * V((double)n / X) *
           e_of(-2.0 * std::sqrt((double)q * (double)n));
  });
  // Vhat0 = (1/2) i^kappa (1 + i) * int V(x) x^{-1/4} dx; the (1 + i) is the
  // stationary-phase constant of the resonant dual term (e^{+i pi/4} branch)
  cdouble I = oscillatory_integral(
      [&V](double x) { return V(x) * std::pow(x, -0.25); },
      [](double) { return 0.0; }, [](double) { return 0.0; }, V.a(), V.b(),
      1e-12);
  cdouble Vhat0 = 0.5 * i_pow(form.weight) * cdouble{1.0, 1.0} * I;
  cdouble main = form[q] / std::pow((double)q, 0.25) * Vhat0 *
                 std::pow(X, 0.75);
  double res = std::abs(S - main);
  return {S, main, res, res / std::pow((double)q * X, 0.25)};
}

}  // namespace oscsum
