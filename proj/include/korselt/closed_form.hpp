#pragma once

#include <optional>
#include <vector>

#include "korselt/core.hpp"

namespace korselt {

enum class Regime { QGt4P, QIn3P4P, QIn2P3P, QLt2P };

const char* regime_str(Regime r);

// Case split of the structure theorem, with the per-regime subcase flags.
// Everything here is a function of p, q, s alone.
struct RegimeTag {
  Regime regime = Regime::QLt2P;
  // 3p < q < 4p
  bool q_eq_4p_minus_3 = false;
  // 2p < q < 3p
  bool s_plus1_divides_q_minus1 = false;
  bool s_eq_p_minus_2_or_quarter_p_minus_5 = false;  // s == p-2 or 4s == p-5
  // q < 2p
  bool q_eq_5 = false;
  bool s_eq_half_p_plus_1 = false;  // p > 2 and 2s == p+1
  bool s_eq_p_minus_1 = false;
  bool p_minus_s_divides_2s_minus_1 = false;
  bool p_minus_s_divides_s_minus_1 = false;
};

RegimeTag regime(const SemiprimePair& pair);

// One generated candidate that survived the check_base filter. raw_num/raw_den
// hold the fraction exactly as the family formula produced it, before
// canonicalization.
struct FamilyElement {
  Rational alpha;
  Family family = Family::Extra;
  std::optional<DivisorWitness> witness;
  Wide raw_num = 0;
  Wide raw_den = 1;
};

// Family generators. Each walks (d_q | q-1, d_p | p-1, eps = +-1), applies the
// family's side conditions, canonicalizes and keeps the check_base survivors.
std::vector<FamilyElement> gen_A(const SemiprimePair& pair);
std::vector<FamilyElement> gen_B(const SemiprimePair& pair);
std::vector<FamilyElement> gen_C(const SemiprimePair& pair);
std::vector<FamilyElement> gen_D(const SemiprimePair& pair);

// Full Q-KS(pq) assembled per regime from the families plus the regime's
// extra elements, deduplicated and sorted.
KorseltSet closed_form_q_ks(const SemiprimePair& pair);

// Z-KS(pq) for q < 2p: {p + eps*d_q : s - eps*d_q divides p-1} plus 2p when
// p-s divides p-1, filtered through check_base. Throws std::domain_error for
// q > 2p (the theorem does not cover that regime; use the oracle).
std::vector<std::int64_t> closed_form_z_ks(const SemiprimePair& pair);

}  // namespace korselt
