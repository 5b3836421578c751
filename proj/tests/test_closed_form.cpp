#include <algorithm>
#include <array>

#include "doctest.h"
#include "korselt/closed_form.hpp"

using namespace korselt;

namespace {

std::vector<Rational> values_of(const std::vector<FamilyElement>& fes) {
  std::vector<Rational> out;
  for (const FamilyElement& fe : fes) out.push_back(fe.alpha);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> values_of(const KorseltSet& set) {
  std::vector<Rational> out;
  for (const SetEntry& e : set.elements) out.push_back(e.alpha);
  return out;
}

bool has_value(const std::vector<FamilyElement>& fes, const Rational& alpha) {
  return std::any_of(fes.begin(), fes.end(),
                     [&](const FamilyElement& fe) { return fe.alpha == alpha; });
}

bool has_witness(const std::vector<FamilyElement>& fes, const Rational& alpha,
                 const DivisorWitness& w) {
  return std::any_of(fes.begin(), fes.end(), [&](const FamilyElement& fe) {
    return fe.alpha == alpha && fe.witness && *fe.witness == w;
  });
}

const SetEntry* find_entry(const KorseltSet& set, const Rational& alpha) {
  for (const SetEntry& e : set.elements)
    if (e.alpha == alpha) return &e;
  return nullptr;
}

const std::array<std::int64_t, 12> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

template <typename Fn>
void for_each_pair(std::int64_t pmax, Fn fn) {
  for (std::size_t a = 0; a < kPrimes.size(); ++a)
    for (std::size_t b = a + 1; b < kPrimes.size(); ++b)
      if (kPrimes[b] <= pmax) fn(SemiprimePair::make(kPrimes[a], kPrimes[b]));
}

// Re-evaluates the displayed family formula on a stored witness.
std::pair<Wide, Wide> formula_of(Family fam, const SemiprimePair& pr,
                                 const DivisorWitness& w) {
  const Wide p = pr.p, q = pr.q, dp = w.dp, dq = w.dq, e = w.eps;
  switch (fam) {
    case Family::A: return {q * dq + e * p * dp, dq + e * dp};
    case Family::B: return {(p * dp - e * dq) * q, q * dp - e * dq};
    case Family::C: return {(q * dq + e * dp) * p, p * dq + e * dp};
    case Family::D: return {(dp + e * dq) * p * q, q * dp + e * p * dq};
    case Family::Extra: break;
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("regime classification and subcase flags") {
  const RegimeTag t1 = regime(SemiprimePair::make(2, 11));
  CHECK(t1.regime == Regime::QGt4P);
  CHECK(std::string(regime_str(t1.regime)) == "q>4p");

  const RegimeTag t2 = regime(SemiprimePair::make(5, 17));
  CHECK(t2.regime == Regime::QIn3P4P);
  CHECK(t2.q_eq_4p_minus_3);

  const RegimeTag t3 = regime(SemiprimePair::make(3, 5));
  CHECK(t3.regime == Regime::QLt2P);
  CHECK(t3.q_eq_5);

  const RegimeTag t4 = regime(SemiprimePair::make(7, 17));
  CHECK(t4.regime == Regime::QIn2P3P);
  CHECK(t4.s_plus1_divides_q_minus1);          // s=3, 4 | 16
  CHECK_FALSE(t4.s_eq_p_minus_2_or_quarter_p_minus_5);

  const RegimeTag t5 = regime(SemiprimePair::make(3, 7));
  CHECK(t5.regime == Regime::QIn2P3P);
  CHECK(t5.s_plus1_divides_q_minus1);
  CHECK(t5.s_eq_p_minus_2_or_quarter_p_minus_5);  // s = 1 = p-2

  const RegimeTag t6 = regime(SemiprimePair::make(2, 3));
  CHECK(t6.regime == Regime::QLt2P);
  CHECK(t6.s_eq_p_minus_1);
  CHECK(t6.p_minus_s_divides_2s_minus_1);
  CHECK(t6.p_minus_s_divides_s_minus_1);  // divides(1, 0)
  CHECK_FALSE(t6.q_eq_5);
}

TEST_CASE("gen_A on the worked pairs") {
  const auto a57 = gen_A(SemiprimePair::make(5, 7));
  CHECK(has_witness(a57, Rational(6, 1), {1, 1, +1}));

  const auto a23 = gen_A(SemiprimePair::make(2, 3));
  CHECK(has_witness(a23, Rational(5, 2), {1, 1, +1}));
  CHECK(values_of(a23) ==
        std::vector<Rational>{Rational(5, 2), Rational(8, 3), Rational(4, 1)});
}

TEST_CASE("gen_B honors the q<2p side condition") {
  const auto b23 = gen_B(SemiprimePair::make(2, 3));
  CHECK(has_witness(b23, Rational(9, 4), {1, 1, -1}));
  // (dp=1,dq=1,eps=+1) raw 3/2 fails q-p < p*dp - eps*dq; the value re-enters
  // the assembled set as the q/2 extra.
  CHECK_FALSE(has_value(b23, Rational(3, 2)));
  CHECK(has_value(b23, Rational(12, 5)));
}

TEST_CASE("gen_B keeps alpha1' = 1 members when q > 2p") {
  const auto b = gen_B(SemiprimePair::make(7, 17));
  CHECK(has_value(b, Rational(17, 3)));  // witness dp=2, dq=4, eps=+1
  CHECK(has_witness(b, Rational(17, 3), {2, 4, +1}));
}

TEST_CASE("gen_C on (2,3)") {
  const auto c23 = gen_C(SemiprimePair::make(2, 3));
  CHECK(has_witness(c23, Rational(14, 5), {1, 2, +1}));
  CHECK(has_witness(c23, Rational(10, 3), {1, 2, -1}));
  CHECK(values_of(c23) == std::vector<Rational>{Rational(8, 3), Rational(14, 5),
                                                Rational(10, 3), Rational(4, 1)});
}

TEST_CASE("gen_D on (2,3) and emptiness beyond q = 4p-3") {
  const auto d23 = gen_D(SemiprimePair::make(2, 3));
  CHECK(has_witness(d23, Rational(12, 5), {1, 1, +1}));
  // (dp=1,dq=2,eps=-1) gives raw -6/-1 = 6 = N, rejected by check_base.
  CHECK(values_of(d23) == std::vector<Rational>{Rational(12, 5), Rational(18, 7)});

  CHECK(gen_D(SemiprimePair::make(2, 11)).empty());
  for_each_pair(37, [&](const SemiprimePair& pr) {
    if (pr.q > 4 * pr.p - 3) CHECK(gen_D(pr).empty());
  });
}

TEST_CASE("family elements stay inside (0, p+q-1]") {
  for_each_pair(31, [&](const SemiprimePair& pr) {
    const Rational upper(pr.p + pr.q - 1, 1);
    for (const auto& gen : {gen_A(pr), gen_B(pr), gen_C(pr), gen_D(pr)}) {
      for (const FamilyElement& fe : gen) {
        REQUIRE(fe.alpha > Rational(0, 1));
        REQUIRE(fe.alpha <= upper);
      }
    }
  });
}

TEST_CASE("witnesses reproduce their raw fractions") {
  for_each_pair(31, [&](const SemiprimePair& pr) {
    for (const auto& gen : {gen_A(pr), gen_B(pr), gen_C(pr), gen_D(pr)}) {
      for (const FamilyElement& fe : gen) {
        REQUIRE(fe.witness.has_value());
        const auto [num, den] = formula_of(fe.family, pr, *fe.witness);
        REQUIRE(num == fe.raw_num);
        REQUIRE(den == fe.raw_den);
        REQUIRE(Rational(num, den) == fe.alpha);
      }
    }
  });
}

TEST_CASE("closed_form_q_ks worked values") {
  const KorseltSet s517 = closed_form_q_ks(SemiprimePair::make(5, 17));
  CHECK(find_entry(s517, Rational(85, 9)) != nullptr);

  const KorseltSet s35 = closed_form_q_ks(SemiprimePair::make(3, 5));
  CHECK(find_entry(s35, Rational(5, 2)) != nullptr);
  CHECK(find_entry(s35, Rational(5, 3)) != nullptr);
  CHECK(korselt_weight(s35) == 13);
}

TEST_CASE("closed_form_q_ks on (2,3) matches the oracle and tags 3/2 as extra") {
  // Worked edge case for s = 1: the s=p-1 branch proposes (s-1)q/(q-2) = 0,
  // which the 0-exclusion drops, and q/2 = 3/2, which stays.
  const SemiprimePair pr = SemiprimePair::make(2, 3);
  const KorseltSet closed = closed_form_q_ks(pr);
  CHECK(values_of(closed) == values_of(oracle_q_ks(pr)));
  CHECK(find_entry(closed, Rational(0, 1)) == nullptr);
  CHECK(korselt_weight(closed) == 9);

  const SetEntry* half = find_entry(closed, Rational(3, 2));
  REQUIRE(half != nullptr);
  CHECK(half->families == family_bit(Family::Extra));
  CHECK(half->witnesses.empty());

  const SetEntry* twelve_fifths = find_entry(closed, Rational(12, 5));
  REQUIRE(twelve_fifths != nullptr);
  CHECK((twelve_fifths->families & family_bit(Family::B)) != 0);
  CHECK((twelve_fifths->families & family_bit(Family::D)) != 0);
}

TEST_CASE("closed form matches the oracle on every small pair") {
  for_each_pair(37, [&](const SemiprimePair& pr) {
    CAPTURE(pr.p);
    CAPTURE(pr.q);
    REQUIRE(values_of(closed_form_q_ks(pr)) == values_of(oracle_q_ks(pr)));
  });
}

TEST_CASE("closed_form_z_ks on (5,7)") {
  const auto z = closed_form_z_ks(SemiprimePair::make(5, 7));
  CHECK(z == std::vector<std::int64_t>{3, 6, 8, 11});
  // 2p = 10 is absent: p-s = 3 does not divide p-1 = 4.
  CHECK(std::find(z.begin(), z.end(), 10) == z.end());
}

TEST_CASE("closed_form_z_ks rejects q > 2p") {
  CHECK_THROWS_AS(closed_form_z_ks(SemiprimePair::make(2, 11)), std::domain_error);
}

TEST_CASE("closed_form_z_ks equals the integer slice for q < 2p") {
  for_each_pair(37, [&](const SemiprimePair& pr) {
    if (pr.q > 2 * pr.p) return;
    const auto z = closed_form_z_ks(pr);
    CHECK(std::find(z.begin(), z.end(), pr.p + pr.q - 1) != z.end());
    std::vector<std::int64_t> slice;
    for (const SetEntry& e : closed_form_q_ks(pr).elements)
      if (e.alpha.is_integer()) slice.push_back(static_cast<std::int64_t>(e.alpha.num()));
    CHECK(z == slice);
  });
}
