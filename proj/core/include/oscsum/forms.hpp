#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oscsum {

// Normalized Hecke eigenvalues lambda(n) = a(n) / n^((weight-1)/2) of the
// unique level-1 eigenform of the given weight, n = 1..N.
struct FourierTable {
  int weight = 0;
  std::size_t N = 0;
  std::vector<double> lambda;  // lambda[n], index 0 unused

  double operator[](std::size_t n) const { return lambda[n]; }
};

inline constexpr int kSupportedWeights[] = {12, 16, 18, 20, 22, 26};
bool weight_supported(int w);

// Coefficients come from the q-expansion products
//   Delta = q * prod (1-q^n)^24,  weight w form = Delta * E_{w-12}
// with E4^2 = E8, E4*E6 = E10, E4^2*E6 = E14 collapsed to single Eisenstein
// sieves.  The integer a(n) are computed exactly: the cusp chain
// (eta^3)^(2^k) and the Eisenstein product are convolved by NTT modulo
// several 31-bit primes and recombined by CRT, so the doubles returned are
// correctly rounded values of the exact integers.
FourierTable build_eigenform(int weight, std::size_t N);
// Build several weights at once, sharing the per-prime cusp chain.
std::vector<FourierTable> build_eigenforms(const std::vector<int>& weights,
                                           std::size_t N);

struct HeckeReport {
  double max_mult_defect = 0.0;    // |l(mn) - l(m)l(n)| / max(1,|l(m)l(n)|)
  double max_hecke_defect = 0.0;   // prime-power recurrence defect
  double max_deligne_excess = 0.0; // max(|l(n)| - tau(n), 0)
  bool pass(double tol) const {
    return max_mult_defect <= tol && max_hecke_defect <= tol &&
           max_deligne_excess <= tol;
  }
};
HeckeReport verify_hecke(const FourierTable& t, double tol);

double rankin_selberg_partial(const FourierTable& t, double X);

// lambda_{1 boxplus (f x g)}(n) = sum over l*m^2*r = n of lambda_f(r)lambda_g(r),
// n = 1..N (index 0 unused).
std::vector<double> convolve_gl5(const FourierTable& f, const FourierTable& g,
                                 std::size_t N);

// Coefficient cache (text CSV, 17 significant digits; decimal round trip is
// bit-exact).
void save_coeff_cache(const FourierTable& t, const std::string& path);
std::optional<FourierTable> load_coeff_cache(const std::string& path);
std::string coeff_cache_filename(int weight, std::size_t N);
// Load from cache_dir if a matching file exists, else build and store.
FourierTable build_eigenform_cached(int weight, std::size_t N,
                                    const std::string& cache_dir);

}  // namespace oscsum
