#include "oscsum/forms.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <numeric>

#include "oscsum/errors.hpp"
#include "oscsum/reduce.hpp"

namespace oscsum {

bool weight_supported(int w) {
  for (int s : kSupportedWeights)
    if (s == w) return true;
  return false;
}

// ===========================================================================
// exact coefficient pipeline: NTT mod 31-bit primes + CRT
// ===========================================================================

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---- Montgomery arithmetic mod a 31-bit odd prime -------------------------
struct Mont {
  u32 p = 0;
  u32 ninv = 0;  // -p^{-1} mod 2^32
  u32 r2 = 0;    // 2^64 mod p (Montgomery form of 1 after one reduce)

  void init(u32 prime) {
    p = prime;
    u32 inv = prime;               // Newton: inv *= 2 - p*inv
    for (int i = 0; i < 5; ++i) inv *= 2u - prime * inv;
    ninv = ~inv + 1u;              // = -p^{-1} mod 2^32
    r2 = (u32)(((u128)1 << 64) % p);
  }
  u32 reduce(u64 x) const {        // x < p*2^32 -> x * 2^-32 mod p, result < p
    u32 m = (u32)x * ninv;
    u64 t = (x + (u64)m * p) >> 32;
    return t >= p ? (u32)(t - p) : (u32)t;
  }
  u32 mul(u32 a, u32 b) const { return reduce((u64)a * b); }
  u32 to_mont(u32 a) const { return mul(a, r2); }
  u32 from_mont(u32 a) const { return reduce(a); }
  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p ? s - p : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 pow(u32 a, u64 e) const {    // a in Montgomery form
    u32 r = to_mont(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

// ---- prime generation -----------------------------------------------------
bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d : {2u, 3u, 5u, 7u})
    if (n % d == 0) return n == d;
  u32 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
    u64 x = 1, b = a % n, e = d;
    while (e) {
      if (e & 1) x = x * b % n;
      b = b * b % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct NttPrime {
  u32 p;
  u32 g;  // primitive root
};

// primes p = k * 2^24 + 1 < 2^31, largest first, so transforms up to 2^24 work
std::vector<NttPrime> ntt_prime_list(std::size_t count) {
  std::vector<NttPrime> out;
  for (u32 k = 127; k >= 1 && out.size() < count; --k) {
    u32 p = (k << 24) | 1u;
    if (!is_prime_u32(p)) continue;
    // factor p-1 = 2^24 * k
    std::vector<u32> fac{2};
    u32 kk = k;
    for (u32 d = 3; d * d <= kk; d += 2)
      while (kk % d == 0) {
        fac.push_back(d);
        while (kk % d == 0) kk /= d;
        break;
      }
    if (kk > 1) fac.push_back(kk);
    std::sort(fac.begin(), fac.end());
    fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
    u32 g = 0;
    for (u32 cand = 2; cand < 100; ++cand) {
      bool ok = true;
      for (u32 f : fac) {
        u64 x = 1, b = cand, e = (p - 1) / f;
        while (e) {
          if (e & 1) x = x * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (x == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
    if (g) out.push_back({p, g});
  }
  if (out.size() < count) throw RangeExceeded("not enough NTT primes");
  return out;
}

// ---- NTT over one prime ---------------------------------------------------
struct NttCtx {
  Mont m;
  std::size_t S = 0;               // transform size, power of two
  std::vector<u32> tw, itw;        // twiddles, flat layout tw[half + j]
  u32 sinv = 0;                    // S^{-1}, Montgomery form

  NttCtx(const NttPrime& np, std::size_t size) {
    m.init(np.p);
    S = size;
    if ((np.p - 1) % S != 0) throw RangeExceeded("transform size too large");
    tw.resize(S);
    itw.resize(S);
    u32 g = m.to_mont(np.g);
    u32 w = m.pow(g, (np.p - 1) / S);                 // primitive S-th root
    u32 iw = m.pow(w, S - 1);                         // w^{-1}
    for (std::size_t len = 2; len <= S; len <<= 1) {
      std::size_t half = len / 2;
      u32 wl = m.pow(w, S / len);
      u32 iwl = m.pow(iw, S / len);
      u32 cw = m.to_mont(1), ciw = m.to_mont(1);
      for (std::size_t j = 0; j < half; ++j) {
        tw[half + j] = cw;
        itw[half + j] = ciw;
        cw = m.mul(cw, wl);
        ciw = m.mul(ciw, iwl);
      }
    }
    sinv = m.pow(m.to_mont((u32)(S % np.p)), np.p - 2);
  }

  void bitrev(std::vector<u32>& a) const {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
  }

  void forward(std::vector<u32>& a) const {
    bitrev(a);
    for (std::size_t len = 2; len <= S; len <<= 1) {
      std::size_t half = len / 2;
      const u32* w = &tw[half];
      for (std::size_t i = 0; i < S; i += len) {
        for (std::size_t j = 0; j < half; ++j) {
          u32 u = a[i + j];
          u32 v = m.mul(a[i + j + half], w[j]);
          a[i + j] = m.add(u, v);
          a[i + j + half] = m.sub(u, v);
        }
      }
    }
  }

  void inverse(std::vector<u32>& a) const {
    bitrev(a);
    for (std::size_t len = 2; len <= S; len <<= 1) {
      std::size_t half = len / 2;
      const u32* w = &itw[half];
      for (std::size_t i = 0; i < S; i += len) {
        for (std::size_t j = 0; j < half; ++j) {
          u32 u = a[i + j];
          u32 v = m.mul(a[i + j + half], w[j]);
          a[i + j] = m.add(u, v);
          a[i + j + half] = m.sub(u, v);
        }
      }
    }
    for (auto& x : a) x = m.mul(x, sinv);
  }
};

// zero everything at index >= L (series truncation)
void truncate_to(std::vector<u32>& a, std::size_t L) {
  std::fill(a.begin() + (long)L, a.end(), 0u);
}

// ---- small fixed bigint for CRT reconstruction ----------------------------
struct BigAcc {
  // value = sum limbs[i] * 2^(64 i); enough limbs for ~12 primes
  static constexpr int kLimbs = 8;
  u64 l[kLimbs] = {};

  void clear() { std::memset(l, 0, sizeof(l)); }
  void add_mul(const BigAcc& x, u32 s) {  // this += x * s
    u64 carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      u128 t = (u128)x.l[i] * s + l[i] + carry;
      l[i] = (u64)t;
      carry = (u64)(t >> 64);
    }
  }
  void mul_u32(u32 s) {  // this *= s
    u64 carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      u128 t = (u128)l[i] * s + carry;
      l[i] = (u64)t;
      carry = (u64)(t >> 64);
    }
  }
  int cmp(const BigAcc& o) const {
    for (int i = kLimbs - 1; i >= 0; --i) {
      if (l[i] != o.l[i]) return l[i] < o.l[i] ? -1 : 1;
    }
    return 0;
  }
  void sub_from(const BigAcc& a) {  // this = a - this (requires a >= this)
    u64 borrow = 0;
    for (int i = 0; i < kLimbs; ++i) {
      u128 t = (u128)a.l[i] - l[i] - borrow;
      l[i] = (u64)t;
      borrow = (t >> 64) ? 1 : 0;
    }
  }
  long double to_ld() const {
    long double v = 0.0L;
    for (int i = kLimbs - 1; i >= 0; --i) v = v * 18446744073709551616.0L + (long double)l[i];
    return v;
  }
};

// Eisenstein factor paired with each weight: coefficient and sigma power of
//   E = 1 + coef * sum sigma_j(n) q^n
struct EisSpec {
  int coef;
  int j;
};
EisSpec eis_for_weight(int w) {
  switch (w) {
    case 12: return {0, 0};    // no factor
    case 16: return {240, 3};  // E4
    case 18: return {-504, 5}; // E6
    case 20: return {480, 7};  // E8  (= E4^2)
    case 22: return {-264, 9}; // E10 (= E4*E6)
    case 26: return {-24, 13}; // E14 (= E4^2*E6)
    default: throw UnsupportedWeight("weight " + std::to_string(w));
  }
}

int primes_needed(int weight, std::size_t N) {
  // |a(n)| <= d(n) n^((w-1)/2); d(n) < 1024 for n <= 2^24
  double bits = 11.0 + 0.5 * (weight - 1) * std::log2((double)std::max<std::size_t>(N, 2)) + 2.0;
  int c = (int)std::ceil(bits / 30.0) + 1;
  return std::max(c, 2);
}

}  // namespace

std::vector<FourierTable> build_eigenforms(const std::vector<int>& weights,
                                           std::size_t N) {
  if (N == 0) throw RangeExceeded("build_eigenform: N = 0");
  if (N > (std::size_t)8000000) throw RangeExceeded("build_eigenform: N too large");
  for (int w : weights)
    if (!weight_supported(w)) throw UnsupportedWeight("weight " + std::to_string(w));

  const std::size_t L = N;  // series indices 0..L-1 (a(n) sits at index n-1)
  std::size_t S = 4;
  while (S < 2 * L) S <<= 1;

  int nprimes = 0;
  for (int w : weights) nprimes = std::max(nprimes, primes_needed(w, N));
  auto primes = ntt_prime_list(nprimes);

  // residues[wi][pi] = vector of a(n) mod p, index n-1
  std::vector<std::vector<std::vector<u32>>> residues(
      weights.size(), std::vector<std::vector<u32>>(nprimes));

  for (int pi = 0; pi < nprimes; ++pi) {
    NttCtx ctx(primes[pi], S);
    const Mont& m = ctx.m;
    u32 p = primes[pi].p;

    // eta^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}
    std::vector<u32> chain(S, 0u);
    for (u64 k = 0;; ++k) {
      u64 tk = k * (k + 1) / 2;
      if (tk >= L) break;
      u64 coef = 2 * k + 1;
      u32 c = (u32)(coef % p);
      if (k & 1) c = c ? p - c : 0;
      chain[tk] = m.add(chain[tk], m.to_mont(c));
    }
    // square three times: eta^3 -> eta^6 -> eta^12 -> eta^24, truncating to L
    for (int sq = 0; sq < 3; ++sq) {
      ctx.forward(chain);
      for (auto& x : chain) x = m.mul(x, x);
      ctx.inverse(chain);
      truncate_to(chain, L);
    }
    // keep the transform of eta^24 for the per-weight products
    std::vector<u32> chain_hat = chain;
    ctx.forward(chain_hat);

    for (std::size_t wi = 0; wi < weights.size(); ++wi) {
      int w = weights[wi];
      if (pi >= primes_needed(w, N)) continue;
      EisSpec es = eis_for_weight(w);
      std::vector<u32> prod;
      if (es.coef == 0) {
        prod = chain;  // weight 12: a(n) = eta24[n-1]
      } else {
        // E = 1 + coef * sum_n sigma_j(n) q^n, built by a divisor sieve mod p
        std::vector<u32> ek(S, 0u);
        ek[0] = m.to_mont(1);
        u32 cf = es.coef >= 0 ? m.to_mont((u32)(es.coef % (int)p))
                              : m.sub(0, m.to_mont((u32)((-es.coef) % (int)p)));
        for (std::size_t d = 1; d < L; ++d) {
          u32 dm = m.to_mont((u32)(d % p));
          u32 dj = m.pow(dm, (u64)es.j);
          u32 term = m.mul(cf, dj);
          for (std::size_t n = d; n < L; n += d) ek[n] = m.add(ek[n], term);
        }
        ctx.forward(ek);
        for (std::size_t i = 0; i < S; ++i) ek[i] = m.mul(ek[i], chain_hat[i]);
        ctx.inverse(ek);
        truncate_to(ek, L);
        prod = std::move(ek);
      }
      // store plain residues a(n) mod p at index n-1
      std::vector<u32>& res = residues[wi][pi];
      res.resize(L);
      for (std::size_t i = 0; i < L; ++i) res[i] = m.from_mont(prod[i]);
    }
  }

  // ---- CRT (Garner) and normalization -------------------------------------
  std::vector<FourierTable> out(weights.size());
  for (std::size_t wi = 0; wi < weights.size(); ++wi) {
    int w = weights[wi];
    int k = primes_needed(w, N);
    std::vector<u32> ps(k);
    for (int i = 0; i < k; ++i) ps[i] = primes[i].p;
    // inv[i] = (p_0 ... p_{i-1})^{-1} mod p_i
    std::vector<u64> inv(k, 1);
    for (int i = 1; i < k; ++i) {
      u64 prod = 1;
      for (int j = 0; j < i; ++j) prod = prod * (ps[j] % ps[i]) % ps[i];
      // Fermat inverse
      u64 x = 1, b = prod, e = ps[i] - 2;
      while (e) {
        if (e & 1) x = x * b % ps[i];
        b = b * b % ps[i];
        e >>= 1;
      }
      inv[i] = x;
    }
    // prefix products as bigints, and M, M/2
    std::vector<BigAcc> prefix(k);
    BigAcc one;
    one.l[0] = 1;
    BigAcc cur = one;
    for (int i = 0; i < k; ++i) {
      prefix[i] = cur;
      cur.mul_u32(ps[i]);
    }
    BigAcc M = cur, Mhalf = cur;
    // halve M
    for (int i = 0; i < BigAcc::kLimbs; ++i) {
      Mhalf.l[i] >>= 1;
      if (i + 1 < BigAcc::kLimbs && (M.l[i + 1] & 1)) Mhalf.l[i] |= 0x8000000000000000ull;
    }

    FourierTable tab;
    tab.weight = w;
    tab.N = N;
    tab.lambda.assign(N + 1, 0.0);
    const double half_wm1 = 0.5 * (w - 1);

    std::size_t nblocks = (L + kReduceBlock - 1) / kReduceBlock;
    parallel_blocks(nblocks, [&](std::size_t blk) {
      std::vector<u64> x(k);
      for (std::size_t idx = blk * kReduceBlock;
           idx < std::min(L, (blk + 1) * kReduceBlock); ++idx) {
        // Garner mixed-radix digits
        x[0] = residues[wi][0][idx];
        for (int i = 1; i < k; ++i) {
          u64 v = x[i - 1] % ps[i];
          for (int j = i - 2; j >= 0; --j) v = (v * (ps[j] % ps[i]) + x[j]) % ps[i];
          u64 r = residues[wi][i][idx];
          u64 diff = (r + ps[i] - v % ps[i]) % ps[i];
          x[i] = diff * inv[i] % ps[i];
        }
        BigAcc val;
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
          if (x[i]) {
            val.add_mul(prefix[i], (u32)x[i]);
            nonzero = true;
          }
        }
        double lam = 0.0;
        if (nonzero) {
          int sign = 1;
          if (val.cmp(Mhalf) > 0) {
            val.sub_from(M);
            sign = -1;
          }
          long double a = val.to_ld();
          long double nn = (long double)(idx + 1);
          lam = (double)(sign * a / std::pow(nn, (long double)half_wm1));
        }
        tab.lambda[idx + 1] = lam;
      }
    });
    out[wi] = std::move(tab);
  }
  return out;
}

FourierTable build_eigenform(int weight, std::size_t N) {
  return std::move(build_eigenforms({weight}, N)[0]);
}

// ===========================================================================
// verification, partial sums, GL5 convolution
// ===========================================================================

HeckeReport verify_hecke(const FourierTable& t, double /*tol*/) {
  HeckeReport rep;
  std::size_t N = t.N;
  if (N < 2) return rep;
  // tau(n) by divisor-count sieve
  std::vector<std::uint16_t> tau(N + 1, 0);
  for (std::size_t d = 1; d <= N; ++d)
    for (std::size_t n = d; n <= N; n += d) ++tau[n];
  for (std::size_t n = 1; n <= N; ++n) {
    double ex = std::abs(t.lambda[n]) - (double)tau[n];
    if (ex > rep.max_deligne_excess) rep.max_deligne_excess = ex;
  }
  // multiplicativity over coprime pairs (parallel over m, max-reduction)
  std::size_t nblocks = (N + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> blockmax(nblocks, 0.0);
  parallel_blocks(nblocks, [&](std::size_t blk) {
    double mx = 0.0;
    for (std::size_t m = std::max<std::size_t>(2, blk * kReduceBlock);
         m < std::min(N + 1, (blk + 1) * kReduceBlock); ++m) {
      for (std::size_t n = 2; n * m <= N; ++n) {
        if (std::gcd(m, n) != 1) continue;
        double lhs = t.lambda[m * n];
        double rhs = t.lambda[m] * t.lambda[n];
        double d = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        if (d > mx) mx = d;
      }
    }
    blockmax[blk] = mx;
  });
  for (double v : blockmax) rep.max_mult_defect = std::max(rep.max_mult_defect, v);
  // Hecke recurrence at prime powers: l(p)l(p^k) = l(p^{k+1}) + l(p^{k-1})
  std::vector<bool> comp(N + 1, false);
  for (std::size_t p = 2; p <= N; ++p) {
    if (comp[p]) continue;
    for (std::size_t q = p * p; q <= N; q += p) comp[q] = true;
    double lp = t.lambda[p];
    double lkm1 = 1.0, lk = lp;
    for (std::size_t pk = p; pk * p <= N; pk *= p) {
      double lkp1 = t.lambda[pk * p];
      double d = std::abs(lp * lk - lkp1 - lkm1) / std::max(1.0, std::abs(lkp1));
      if (d > rep.max_hecke_defect) rep.max_hecke_defect = d;
      lkm1 = lk;
      lk = lkp1;
    }
  }
  return rep;
}

double rankin_selberg_partial(const FourierTable& t, double X) {
  if (X > (double)t.N) throw RangeExceeded("rankin_selberg_partial: X > N");
  std::size_t hi = (std::size_t)std::floor(X);
  return block_sum_real(1, hi + 1, [&](std::size_t n) {
    double l = t.lambda[n];
    return l * l;
  });
}

std::vector<double> convolve_gl5(const FourierTable& f, const FourierTable& g,
                                 std::size_t N) {
  if (f.N < N || g.N < N) throw RangeExceeded("convolve_gl5: tables shorter than N");
  if (f.weight == g.weight)
    std::fprintf(stderr,
                 "# warning: convolve_gl5 with equal weights %d (f not "
                 "orthogonal to g)\n",
                 f.weight);
  std::vector<double> out(N + 1, 0.0);
  // lambda5(n) = sum_{l m^2 r = n} lf(r) lg(r)
  for (std::size_t m = 1; m * m <= N; ++m) {
    std::size_t m2 = m * m;
    for (std::size_t r = 1; r * m2 <= N; ++r) {
      double v = f.lambda[r] * g.lambda[r];
      if (v == 0.0) continue;
      for (std::size_t n = r * m2; n <= N; n += r * m2) out[n] += v;
    }
  }
  return out;
}

// ===========================================================================
// cache
// ===========================================================================

std::string coeff_cache_filename(int weight, std::size_t N) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "coeffs-w%d-N%zu.csv", weight, N);
  return buf;
}

void save_coeff_cache(const FourierTable& t, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw RangeExceeded("cannot open cache file for writing: " + path);
  std::fprintf(fp, "# oscsum-coeffs v1 weight=%d N=%zu normalization=arithmetic\n",
               t.weight, t.N);
  for (std::size_t n = 1; n <= t.N; ++n)
    std::fprintf(fp, "%zu,%.17g\n", n, t.lambda[n]);
  std::fclose(fp);
}

std::optional<FourierTable> load_coeff_cache(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "r");
  if (!fp) return std::nullopt;
  FourierTable t;
  char line[256];
  if (!std::fgets(line, sizeof(line), fp)) {
    std::fclose(fp);
    return std::nullopt;
  }
  std::size_t N = 0;
  int w = 0;
  if (std::sscanf(line, "# oscsum-coeffs v1 weight=%d N=%zu", &w, &N) != 2 ||
      !weight_supported(w) || N == 0) {
    std::fclose(fp);
    return std::nullopt;
  }
  t.weight = w;
  t.N = N;
  t.lambda.assign(N + 1, 0.0);
  std::size_t seen = 0;
  while (std::fgets(line, sizeof(line), fp)) {
    std::size_t n;
    double v;
    if (std::sscanf(line, "%zu,%lg", &n, &v) == 2 && n >= 1 && n <= N) {
      t.lambda[n] = v;
      ++seen;
    }
  }
  std::fclose(fp);
  if (seen != N) return std::nullopt;
  return t;
}

FourierTable build_eigenform_cached(int weight, std::size_t N,
                                    const std::string& cache_dir) {
  namespace fs = std::filesystem;
  if (cache_dir.empty()) return build_eigenform(weight, N);
  fs::path dir(cache_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path file = dir / coeff_cache_filename(weight, N);
  if (auto t = load_coeff_cache(file.string())) return std::move(*t);
  FourierTable t = build_eigenform(weight, N);
  save_coeff_cache(t, file.string());
  return t;
}

}  // namespace oscsum
