#include "oscsum/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "oscsum/errors.hpp"

namespace oscsum {

namespace {
// smallest-prime-factor table, swapped in atomically so concurrent readers
// always see a complete sieve
std::shared_ptr<const std::vector<std::uint32_t>> g_spf =
    std::make_shared<const std::vector<std::uint32_t>>();
std::mutex g_spf_mutex;

std::shared_ptr<const std::vector<std::uint32_t>> spf_snapshot(std::uint64_t need) {
  auto cur = std::atomic_load(&g_spf);
  if (cur->size() > need) return cur;
  std::lock_guard<std::mutex> lock(g_spf_mutex);
  cur = std::atomic_load(&g_spf);
  if (cur->size() > need) return cur;
  std::uint64_t n = std::max<std::uint64_t>(need, 1024);
  auto spf = std::make_shared<std::vector<std::uint32_t>>(n + 1, 0);
  auto& t = *spf;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (t[i] == 0) {
      for (std::uint64_t j = i; j <= n; j += i)
        if (t[j] == 0) t[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::shared_ptr<const std::vector<std::uint32_t>> frozen = spf;
  std::atomic_store(&g_spf, frozen);
  return frozen;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  auto spf = spf_snapshot(n);
  const auto& t = *spf;
  std::vector<std::pair<std::uint64_t, int>> out;
  while (n > 1) {
    std::uint64_t p = t[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}
}  // namespace

void ensure_sieve(std::uint64_t n) { spf_snapshot(n); }

int mobius(std::uint64_t n) {
  if (n == 0) throw RangeExceeded("mobius(0)");
  if (n == 1) return 1;
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw RangeExceeded("euler_phi(0)");
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw RangeExceeded("divisors(0)");
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t sz = out.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ramanujan_sum(std::int64_t m, std::uint64_t q) {
  if (q == 0) throw RangeExceeded("ramanujan_sum: q = 0");
  std::uint64_t am = static_cast<std::uint64_t>(m < 0 ? -m : m);
  std::uint64_t g = am == 0 ? q : std::gcd(am, q);
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(g)) sum += static_cast<std::int64_t>(d) * mobius(q / d);
  return sum;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t q) {
  if (q == 0) throw RangeExceeded("mod_inverse: q = 0");
  if (q == 1) return 0;
  std::int64_t qi = static_cast<std::int64_t>(q);
  std::int64_t r = a % qi;
  if (r < 0) r += qi;
  std::int64_t old_r = r, cur_r = qi;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    std::int64_t quot = old_r / cur_r;
    std::int64_t tmp = old_r - quot * cur_r;
    old_r = cur_r;
    cur_r = tmp;
    tmp = old_s - quot * cur_s;
    old_s = cur_s;
    cur_s = tmp;
  }
  if (old_r != 1) throw NonInvertible("gcd != 1");
  std::int64_t inv = old_s % qi;
  if (inv < 0) inv += qi;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace oscsum
