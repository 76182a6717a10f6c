#pragma once
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <vector>

namespace oscsum {

// Compensated (Kahan-Neumaier) accumulator.  Used everywhere a long sum feeds
// a tolerance-checked comparison, so rounding noise stays near eps * max|term|
// instead of eps * n * max|term|.
template <class T>
class KahanSum {
  T sum_{};
  T cor_{};

  static void add1(double& s, double& c, double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }

 public:
  void add(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
      double sr = sum_.real(), si = sum_.imag();
      double cr = cor_.real(), ci = cor_.imag();
      add1(sr, cr, v.real());
      add1(si, ci, v.imag());
      sum_ = {sr, si};
      cor_ = {cr, ci};
    } else {
      double s = sum_, c = cor_;
      add1(s, c, v);
      sum_ = s;
      cor_ = c;
    }
  }
  T value() const { return sum_ + cor_; }
};

// Deterministic blocked reduction: the index range is cut into fixed-size
// blocks, each block is summed with a compensated accumulator, and the block
// results are combined in index order.  The tree shape depends only on the
// range, never on the thread count, so results are bit-identical whether the
// blocks are evaluated by 1 thread or many.
inline constexpr std::size_t kReduceBlock = 4096;

std::size_t thread_count();               // current global worker budget
void set_thread_count(std::size_t n);     // 0 = hardware default

// Evaluate fn(i) for i in [lo, hi) and return the deterministic blocked sum.
std::complex<double> block_sum(std::size_t lo, std::size_t hi,
                               const std::function<std::complex<double>(std::size_t)>& fn);
double block_sum_real(std::size_t lo, std::size_t hi,
                      const std::function<double(std::size_t)>& fn);

// Run fn(b) for each block index b in [0, nblocks) on the worker pool.
// Blocks must write to disjoint state; completion order is unspecified.
void parallel_blocks(std::size_t nblocks, const std::function<void(std::size_t)>& fn);

}  // namespace oscsum
