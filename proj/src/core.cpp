#include "korselt/core.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace korselt {

SemiprimePair SemiprimePair::make(std::int64_t p, std::int64_t q) {
  if (p > kMaxPrimeInput || q > kMaxPrimeInput)
    throw std::invalid_argument("prime inputs are capped at 2^31 - 1");
  if (p >= q)
    throw std::invalid_argument("requires p < q, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  if (p < 2 || !korselt::is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!korselt::is_prime(static_cast<std::uint64_t>(q)))
    throw std::invalid_argument(std::to_string(q) + " is not prime");
  SemiprimePair pr;
  pr.p = p;
  pr.q = q;
  pr.n = p * q;
  pr.i = q / p;
  pr.s = q % p;
  return pr;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Extra: return "EXTRA";
  }
  return "?";
}

std::vector<std::string> family_names(FamilyMask mask) {
  std::vector<std::string> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::Extra})
    if (mask & family_bit(f)) out.emplace_back(family_name(f));
  return out;
}

bool check_base(std::int64_t n, std::span<const std::int64_t> prime_divisors,
                const Rational& alpha) {
  if (n < 2) throw std::invalid_argument("check_base: n must be >= 2");
  if (prime_divisors.empty())
    throw std::invalid_argument("check_base: empty prime divisor list");
  for (std::int64_t r : prime_divisors) {
    if (r < 2 || n % r != 0)
      throw std::invalid_argument("check_base: listed prime " + std::to_string(r) +
                                  " does not divide " + std::to_string(n));
  }
  if (alpha.is_zero()) return false;
  if (alpha.is_integer() && alpha.num() == n) return false;
  const Wide target = alpha.den() * Wide(n) - alpha.num();
  for (std::int64_t r : prime_divisors) {
    if (!divides(alpha.den() * Wide(r) - alpha.num(), target)) return false;
  }
  return true;
}

namespace {

void sort_entries(std::vector<SetEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SetEntry& a, const SetEntry& b) { return a.alpha < b.alpha; });
}

}  // namespace

KorseltSet oracle_q_ks(const SemiprimePair& pr) {
  const auto d_divs = divisor_set(pr.p * (pr.q - 1));
  const auto e_divs = divisor_set(pr.q * (pr.p - 1));
  const Wide gap = pr.q - pr.p;
  const std::array<std::int64_t, 2> primes{pr.p, pr.q};
  std::vector<SetEntry> found;
  for (std::int64_t du : d_divs) {
    for (int sd : {-1, +1}) {
      const Wide d = Wide(sd) * du;
      for (std::int64_t eu : e_divs) {
        for (int se : {-1, +1}) {
          const Wide e = Wide(se) * eu;
          const Wide diff = e - d;
          if (diff < gap || diff % gap != 0) continue;  // alpha2 >= 1
          const Wide a2 = diff / gap;
          const Wide a1 = (Wide(pr.p) * e - Wide(pr.q) * d) / gap;
          // A non-canonical pair is skipped; its reduced form shows up under
          // its own (D, E).
          if (std::gcd(wide_abs(a1), a2) != 1) continue;
          const Rational alpha = Rational::from_canonical(a1, a2);
          if (check_base(pr.n, primes, alpha)) found.push_back({alpha, 0, {}});
        }
      }
    }
  }
  sort_entries(found);
  return {pr, std::move(found)};
}

std::vector<std::int64_t> oracle_z_ks(const SemiprimePair& pr) {
  std::vector<std::int64_t> out;
  for (const SetEntry& e : oracle_q_ks(pr).elements)
    if (e.alpha.is_integer()) out.push_back(static_cast<std::int64_t>(e.alpha.num()));
  return out;
}

KorseltSet naive_box_scan(const SemiprimePair& pr, std::uint64_t iteration_cap) {
  const Wide gap = pr.q - pr.p;
  const Wide a2_max = (Wide(pr.q) * (pr.p - 1) + Wide(pr.p) * (pr.q - 1)) / gap;
  const Wide a1_max = Wide(pr.p) * pr.q * (pr.p + pr.q - 2) / gap;
  const Wide iterations = a2_max * (2 * a1_max + 1);
  if (iterations > Wide(iteration_cap))
    throw BudgetError("naive_box_scan: box of " + to_string(iterations) +
                      " candidates exceeds cap of " + std::to_string(iteration_cap));
  const std::array<std::int64_t, 2> primes{pr.p, pr.q};
  std::vector<SetEntry> found;
  for (std::int64_t a2 = 1; a2 <= static_cast<std::int64_t>(a2_max); ++a2) {
    for (std::int64_t a1 = -static_cast<std::int64_t>(a1_max);
         a1 <= static_cast<std::int64_t>(a1_max); ++a1) {
      if (std::gcd(a1 < 0 ? -a1 : a1, a2) != 1) continue;
      const Rational alpha = Rational::from_canonical(a1, a2);
      if (check_base(pr.n, primes, alpha)) found.push_back({alpha, 0, {}});
    }
  }
  sort_entries(found);
  return {pr, std::move(found)};
}

PDecomposition decompose_by_p(const Rational& alpha, const SemiprimePair& pr) {
  const Wide t = euclid_mod(alpha.num(), pr.p);
  return {(alpha.num() - t) / pr.p, static_cast<std::int64_t>(t)};
}

}  // namespace korselt
