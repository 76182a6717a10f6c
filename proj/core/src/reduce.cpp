#include "oscsum/reduce.hpp"

#include <atomic>
#include <thread>

namespace oscsum {

namespace {
std::atomic<std::size_t> g_threads{0};  // 0 = hardware default

std::size_t resolve_threads() {
  std::size_t n = g_threads.load(std::memory_order_relaxed);
  if (n == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw ? hw : 1;
  }
  return n;
}
}  // namespace

std::size_t thread_count() { return resolve_threads(); }
void set_thread_count(std::size_t n) { g_threads.store(n, std::memory_order_relaxed); }

void parallel_blocks(std::size_t nblocks, const std::function<void(std::size_t)>& fn) {
  std::size_t nthreads = std::min(resolve_threads(), nblocks ? nblocks : std::size_t(1));
  if (nthreads <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t i = 0; i < nthreads; ++i) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= nblocks) return;
        fn(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::complex<double> block_sum(std::size_t lo, std::size_t hi,
                               const std::function<std::complex<double>(std::size_t)>& fn) {
  if (hi <= lo) return {};
  std::size_t n = hi - lo;
  std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<std::complex<double>> partial(nblocks);
  parallel_blocks(nblocks, [&](std::size_t b) {
    std::size_t i0 = lo + b * kReduceBlock;
    std::size_t i1 = std::min(hi, i0 + kReduceBlock);
    KahanSum<std::complex<double>> acc;
    for (std::size_t i = i0; i < i1; ++i) acc.add(fn(i));
    partial[b] = acc.value();
  });
  // fixed-order pairwise combine of the block results
  while (partial.size() > 1) {
    std::size_t half = (partial.size() + 1) / 2;
    for (std::size_t i = 0; i + half < partial.size(); ++i) partial[i] += partial[i + half];
    partial.resize(half);
  }
  return partial[0];
}

double block_sum_real(std::size_t lo, std::size_t hi,
                      const std::function<double(std::size_t)>& fn) {
  if (hi <= lo) return 0.0;
  std::size_t n = hi - lo;
  std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(nblocks);
  parallel_blocks(nblocks, [&](std::size_t b) {
    std::size_t i0 = lo + b * kReduceBlock;
    std::size_t i1 = std::min(hi, i0 + kReduceBlock);
    KahanSum<double> acc;
    for (std::size_t i = i0; i < i1; ++i) acc.add(fn(i));
    partial[b] = acc.value();
  });
  while (partial.size() > 1) {
    std::size_t half = (partial.size() + 1) / 2;
    for (std::size_t i = 0; i + half < partial.size(); ++i) partial[i] += partial[i + half];
    partial.resize(half);
  }
  return partial[0];
}

}  // namespace oscsum
