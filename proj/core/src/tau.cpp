#include "zetalab/tau.hpp"

#include <numeric>

#include "zetalab/errors.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

namespace {

using i128 = __int128;

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
  Integer hi((unsigned long)(u >> 64));
  Integer lo((unsigned long)(u & 0xffffffffffffffffULL));
  Integer r = (hi << 64) + lo;
  return neg ? -r : r;
}

std::vector<i128> square_series(const std::vector<i128>& a) {
  const std::size_t n = a.size();
  std::vector<i128> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    // diagonal
    if (2 * i < n) out[2 * i] += a[i] * a[i];
    for (std::size_t j = i + 1; i + j < n; ++j) {
      if (a[j] == 0) continue;
      out[i + j] += 2 * a[i] * a[j];
    }
  }
  return out;
}

}  // namespace

std::vector<Integer> ramanujan_tau(std::uint32_t N) {
  if (N == 0) throw domain_violation("ramanujan_tau: N must be >= 1");
  // E(q)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}  (Jacobi), truncated at N terms.
  std::vector<i128> e3(N, 0);
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t ex = k * (k + 1) / 2;
    if (ex >= N) break;
    const i128 c = (i128)(2 * k + 1);
    e3[ex] += (k % 2 == 0) ? c : -c;
  }
  auto e6 = square_series(e3);
  auto e12 = square_series(e6);
  auto e24 = square_series(e12);
  // tau(n) = coefficient of q^{n-1} in E^{24}.
  std::vector<Integer> tau(N + 1);
  tau[0] = 0;
  for (std::uint32_t n = 1; n <= N; ++n) tau[n] = to_integer(e24[n - 1]);
  return tau;
}

std::uint64_t tau_hecke_check(const std::vector<Integer>& tau) {
  const std::size_t N = tau.size() - 1;
  std::uint64_t pairs = 0;
  for (std::size_t n = 2; n * 2 <= N; ++n) {
    for (std::size_t m = 2; n * m <= N; ++m) {
      if (std::gcd(n, m) != 1) continue;
      if (tau[n] * tau[m] != tau[n * m])
        throw std::logic_error("tau multiplicativity failed at (" +
                               std::to_string(n) + ", " + std::to_string(m) + ")");
      ++pairs;
    }
  }
  // Prime-power recursion tau(p^{k+1}) = tau(p) tau(p^k) - p^11 tau(p^{k-1});
  // together with multiplicativity this is the full Hecke relation.
  for (std::size_t p = 2; p * p <= N; ++p) {
    if (!is_prime(p)) continue;
    const Integer p11 = pow_integer((long)p, 11);
    std::size_t pk = p * p;
    std::size_t prev = p, prev2 = 1;
    while (pk <= N) {
      if (tau[pk] != tau[p] * tau[prev] - p11 * tau[prev2])
        throw std::logic_error("tau Hecke recursion failed at p^k = " +
                               std::to_string(pk));
      prev2 = prev;
      prev = pk;
      pk *= p;
      ++pairs;
    }
  }
  return pairs;
}

std::uint64_t tau_bound_check(const std::vector<Integer>& tau) {
  const std::size_t N = tau.size() - 1;
  std::uint64_t checked = 0;
  for (std::uint32_t p : primes_up_to((std::uint32_t)N)) {
    if (tau[p] * tau[p] > 4 * pow_integer(p, 11))
      throw std::logic_error("Deligne bound violated at p = " + std::to_string(p));
    ++checked;
  }
  return checked;
}

}  // namespace zetalab
