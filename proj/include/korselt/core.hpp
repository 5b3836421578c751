#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "korselt/arith.hpp"
#include "korselt/rational.hpp"

namespace korselt {

// Validated pair of primes p < q with N = pq and the Euclidean split
// q = i*p + s, 1 <= s <= p-1.
struct SemiprimePair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t i = 0;
  std::int64_t s = 0;

  static SemiprimePair make(std::int64_t p, std::int64_t q);
};

// alpha1 = j*p + t with t in [0, p-1] (Euclidean convention for negative alpha1).
struct PDecomposition {
  Wide j = 0;
  std::int64_t t = 0;
};

// (d_p | p-1, d_q | q-1, eps = +-1) certifying a closed-form family member.
struct DivisorWitness {
  std::int64_t dp = 0;
  std::int64_t dq = 0;
  int eps = 1;

  friend bool operator==(const DivisorWitness&, const DivisorWitness&) = default;
};

enum class Family : unsigned {
  A = 1u << 0,
  B = 1u << 1,
  C = 1u << 2,
  D = 1u << 3,
  Extra = 1u << 4,
};
using FamilyMask = unsigned;

constexpr FamilyMask family_bit(Family f) { return static_cast<FamilyMask>(f); }
const char* family_name(Family f);
std::vector<std::string> family_names(FamilyMask mask);

struct SetEntry {
  Rational alpha;
  FamilyMask families = 0;
  std::vector<DivisorWitness> witnesses;
};

// Sorted, duplicate-free Korselt set of one pair; every element passes
// check_base and none equals 0 or N.
struct KorseltSet {
  SemiprimePair pair;
  std::vector<SetEntry> elements;
};

inline std::size_t korselt_weight(const KorseltSet& set) { return set.elements.size(); }

// Definitional predicate: alpha (canonical) is an n-Korselt base, i.e.
// alpha != 0, alpha != n, and a2*r - a1 divides a2*n - a1 for every prime
// divisor r of n. prime_divisors must be exactly the primes dividing n;
// listing one that does not divide n throws.
bool check_base(std::int64_t n, std::span<const std::int64_t> prime_divisors,
                const Rational& alpha);

// Brute-force Q-KS(pq): every canonical member alpha1/alpha2 corresponds to
// exactly one pair D = a2*p - a1, E = a2*q - a1 with D | p(q-1) and
// E | q(p-1), so walking the signed divisor grid and re-testing with
// check_base is complete.
KorseltSet oracle_q_ks(const SemiprimePair& pair);

// The alpha2 = 1 slice of oracle_q_ks, as integers.
std::vector<std::int64_t> oracle_z_ks(const SemiprimePair& pair);

inline constexpr std::uint64_t kDefaultBoxScanCap = 250'000'000;

// Secondary oracle: scan every canonical (a1, a2) in the box
// |a1| <= pq(p+q-2)/(q-p), 1 <= a2 <= (q(p-1)+p(q-1))/(q-p) and keep the
// check_base survivors. Intended for p < q <= 31.
KorseltSet naive_box_scan(const SemiprimePair& pair,
                          std::uint64_t iteration_cap = kDefaultBoxScanCap);

PDecomposition decompose_by_p(const Rational& alpha, const SemiprimePair& pair);

}  // namespace korselt
