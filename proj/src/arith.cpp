#include "korselt/arith.hpp"

#include <algorithm>
#include <limits>

namespace korselt {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t x = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) x = mulmod(x, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return x;
}

// The first twelve primes witness every composite below 3.3 * 10^24.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  const std::uint64_t d0 = n - 1;
  int r = 0;
  std::uint64_t d = d0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> divisor_set(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("divisor_set: m must be >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= m / d; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> distinct_prime_divisors(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("distinct_prime_divisors: n must be >= 2");
  std::vector<std::int64_t> primes;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

SpfTable::SpfTable(std::int64_t limit, std::size_t budget_bytes) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("spf_sieve: limit must be >= 2");
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw BudgetError("spf_sieve: limit does not fit 32-bit table entries");
  const std::size_t bytes =
      (static_cast<std::size_t>(limit) + 1) * sizeof(std::uint32_t);
  if (bytes > budget_bytes)
    throw BudgetError("spf_sieve: table needs " + std::to_string(bytes) +
                      " bytes, budget is " + std::to_string(budget_bytes));
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::int64_t SpfTable::spf(std::int64_t n) const {
  if (n < 2 || n > limit_)
    throw std::invalid_argument("spf: n outside [2, limit]");
  return spf_[n];
}

bool SpfTable::distinct_primes(std::int64_t n, std::vector<std::int64_t>& out) const {
  if (n < 2 || n > limit_)
    throw std::invalid_argument("distinct_primes: n outside [2, limit]");
  bool squarefree = true;
  while (n > 1) {
    const std::int64_t p = spf_[n];
    out.push_back(p);
    int exp = 0;
    while (n % p == 0) {
      n /= p;
      ++exp;
    }
    if (exp > 1) squarefree = false;
  }
  return squarefree;
}

}  // namespace korselt
