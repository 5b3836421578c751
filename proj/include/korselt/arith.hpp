#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "korselt/wide.hpp"

namespace korselt {

// Largest admissible prime input (2^31 - 1); keeps pq*(p+q) inside Wide.
inline constexpr std::int64_t kMaxPrimeInput = 2147483647;

// Thrown when a request exceeds a configured memory or iteration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sign-insensitive divisibility; divides(0, x) only when x == 0.
constexpr bool divides(Wide d, Wide x) { return d != 0 ? x % d == 0 : x == 0; }

// Deterministic Miller-Rabin; exact for every uint64 input.
bool is_prime(std::uint64_t n);

// All positive divisors of m >= 1, ascending (trial division up to sqrt(m)).
std::vector<std::int64_t> divisor_set(std::int64_t m);

// Distinct prime divisors of n >= 2, ascending, by trial division.
std::vector<std::int64_t> distinct_prime_divisors(std::int64_t n);

inline constexpr std::size_t kDefaultSieveBudget = std::size_t{1} << 30;  // bytes

// Smallest-prime-factor table over [2, limit]; any n <= limit factors by
// repeated division.
class SpfTable {
 public:
  explicit SpfTable(std::int64_t limit,
                    std::size_t budget_bytes = kDefaultSieveBudget);

  std::int64_t limit() const { return limit_; }
  std::int64_t spf(std::int64_t n) const;
  bool is_prime(std::int64_t n) const { return n >= 2 && spf(n) == n; }

  // Appends the distinct prime divisors of n (ascending) to out;
  // returns true iff n is squarefree.
  bool distinct_primes(std::int64_t n, std::vector<std::int64_t>& out) const;

 private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace korselt
