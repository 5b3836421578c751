#include "korselt/closed_form.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace korselt {

const char* regime_str(Regime r) {
  switch (r) {
    case Regime::QGt4P: return "q>4p";
    case Regime::QIn3P4P: return "3p<q<4p";
    case Regime::QIn2P3P: return "2p<q<3p";
    case Regime::QLt2P: return "q<2p";
  }
  return "?";
}

RegimeTag regime(const SemiprimePair& pr) {
  RegimeTag tag;
  if (pr.i >= 4) {
    tag.regime = Regime::QGt4P;
  } else if (pr.i == 3) {
    tag.regime = Regime::QIn3P4P;
    tag.q_eq_4p_minus_3 = pr.q == 4 * pr.p - 3;
  } else if (pr.i == 2) {
    tag.regime = Regime::QIn2P3P;
    tag.s_plus1_divides_q_minus1 = (pr.q - 1) % (pr.s + 1) == 0;
    tag.s_eq_p_minus_2_or_quarter_p_minus_5 =
        pr.s == pr.p - 2 || 4 * pr.s == pr.p - 5;
  } else {
    tag.regime = Regime::QLt2P;
    tag.q_eq_5 = pr.q == 5;
    tag.s_eq_half_p_plus_1 = pr.p > 2 && 2 * pr.s == pr.p + 1;
    tag.s_eq_p_minus_1 = pr.s == pr.p - 1;
    tag.p_minus_s_divides_2s_minus_1 = divides(pr.p - pr.s, 2 * pr.s - 1);
    tag.p_minus_s_divides_s_minus_1 = divides(pr.p - pr.s, pr.s - 1);
  }
  return tag;
}

namespace {

struct RawCandidate {
  Wide num;
  Wide den;
  DivisorWitness witness;
};

std::vector<FamilyElement> filter_candidates(const SemiprimePair& pr, Family fam,
                                             const std::vector<RawCandidate>& raw) {
  const std::array<std::int64_t, 2> primes{pr.p, pr.q};
  std::vector<FamilyElement> out;
  for (const RawCandidate& c : raw) {
    Rational alpha(c.num, c.den);
    if (!check_base(pr.n, primes, alpha)) continue;
    out.push_back({alpha, fam, c.witness, c.num, c.den});
  }
  return out;
}

template <typename Fn>
void for_each_witness(const SemiprimePair& pr, Fn fn) {
  for (std::int64_t dq : divisor_set(pr.q - 1))
    for (std::int64_t dp : divisor_set(pr.p - 1))
      for (int eps : {+1, -1}) fn(dp, dq, eps);
}

}  // namespace

std::vector<FamilyElement> gen_A(const SemiprimePair& pr) {
  const Wide gap = pr.q - pr.p;
  std::vector<RawCandidate> raw;
  for_each_witness(pr, [&](std::int64_t dp, std::int64_t dq, int eps) {
    const Wide den = Wide(dq) + Wide(eps) * dp;
    if (den == 0 || den % gap != 0) return;
    const Wide num = Wide(pr.q) * dq + Wide(eps) * pr.p * dp;
    raw.push_back({num, den, {dp, dq, eps}});
  });
  return filter_candidates(pr, Family::A, raw);
}

std::vector<FamilyElement> gen_B(const SemiprimePair& pr) {
  const Wide gap = pr.q - pr.p;
  std::vector<RawCandidate> raw;
  for_each_witness(pr, [&](std::int64_t dp, std::int64_t dq, int eps) {
    const Wide den = Wide(pr.q) * dp - Wide(eps) * dq;
    if (den % gap != 0) return;
    const Wide lead = Wide(pr.p) * dp - Wide(eps) * dq;  // alpha1' * (q-p)
    // For q < 2p the family excludes alpha1' = 1 (those members are the
    // regime's q/2 and q/3 extras); for q > 2p every alpha1' >= 1 belongs.
    if (pr.q < 2 * pr.p ? lead <= gap : lead < gap) return;
    raw.push_back({lead * pr.q, den, {dp, dq, eps}});
  });
  return filter_candidates(pr, Family::B, raw);
}

std::vector<FamilyElement> gen_C(const SemiprimePair& pr) {
  const Wide gap = pr.q - pr.p;
  std::vector<RawCandidate> raw;
  for_each_witness(pr, [&](std::int64_t dp, std::int64_t dq, int eps) {
    const Wide den = Wide(pr.p) * dq + Wide(eps) * dp;
    if (den % gap != 0) return;
    const Wide num = (Wide(pr.q) * dq + Wide(eps) * dp) * pr.p;
    raw.push_back({num, den, {dp, dq, eps}});
  });
  return filter_candidates(pr, Family::C, raw);
}

std::vector<FamilyElement> gen_D(const SemiprimePair& pr) {
  const Wide gap = pr.q - pr.p;
  std::vector<RawCandidate> raw;
  for_each_witness(pr, [&](std::int64_t dp, std::int64_t dq, int eps) {
    const Wide lead = Wide(dp) + Wide(eps) * dq;
    if (lead == 0 || lead % gap != 0) return;
    const Wide den = Wide(pr.q) * dp + Wide(eps) * pr.p * dq;
    raw.push_back({lead * pr.p * pr.q, den, {dp, dq, eps}});
  });
  auto out = filter_candidates(pr, Family::D, raw);
  // Elements with pq | alpha1 exist only when q <= 4p-3.
  if (pr.q > 4 * pr.p - 3 && !out.empty())
    throw std::logic_error("gen_D: nonempty output for q > 4p-3");
  return out;
}

namespace {

void merge_element(std::map<Rational, SetEntry>& merged, const FamilyElement& fe) {
  SetEntry& entry = merged[fe.alpha];
  entry.alpha = fe.alpha;
  entry.families |= family_bit(fe.family);
  if (fe.witness &&
      std::find(entry.witnesses.begin(), entry.witnesses.end(), *fe.witness) ==
          entry.witnesses.end())
    entry.witnesses.push_back(*fe.witness);
}

}  // namespace

KorseltSet closed_form_q_ks(const SemiprimePair& pr) {
  const RegimeTag tag = regime(pr);

  std::vector<FamilyElement> members = gen_B(pr);
  {
    auto c = gen_C(pr);
    members.insert(members.end(), c.begin(), c.end());
  }
  if (tag.regime == Regime::QLt2P) {
    auto a = gen_A(pr);
    members.insert(members.end(), a.begin(), a.end());
    auto d = gen_D(pr);
    members.insert(members.end(), d.begin(), d.end());
  }

  const Wide p = pr.p;
  const Wide q = pr.q;
  const Wide s = pr.s;
  std::vector<std::pair<Wide, Wide>> extras;
  switch (tag.regime) {
    case Regime::QGt4P:
      extras = {{p + q - 1, 1}};
      break;
    case Regime::QIn3P4P:
      extras = {{p + q - 1, 1}};
      if (tag.q_eq_4p_minus_3) {
        extras.push_back({q - p + 1, 1});
        extras.push_back({p * q, 2 * p - 1});
      }
      break;
    case Regime::QIn2P3P:
      if (tag.s_plus1_divides_q_minus1) {
        extras = {{q - p + 1, 1},
                  {p + q - 1, 1},
                  {2 * p + q - 1, 2},
                  {p * q, 2 * p - 1},
                  {2 * p * q, q + 1}};
        if (tag.s_eq_p_minus_2_or_quarter_p_minus_5) {
          extras.push_back({3 * q - 5 * p + 3, 1});
          extras.push_back({2 * p * q, 3 * p - 1});
        }
      } else {
        extras = {{p + q - 1, 1}};
      }
      break;
    case Regime::QLt2P:
      // The subcase conditions overlap; the theorem's listed order decides.
      if (tag.q_eq_5)
        extras = {{q, 2}, {q, 3}};
      else if (tag.s_eq_half_p_plus_1)
        extras = {{q, 3}};
      else if (tag.s_eq_p_minus_1)
        extras = {{(s - 1) * q, q - 2}, {q, 2}};
      else if (tag.p_minus_s_divides_2s_minus_1)
        extras = {{q, 2}};
      else if (tag.p_minus_s_divides_s_minus_1)
        extras = {{(s - 1) * q, q - 2}};
      break;
  }

  const std::array<std::int64_t, 2> primes{pr.p, pr.q};
  for (const auto& [num, den] : extras) {
    Rational alpha(num, den);
    if (!check_base(pr.n, primes, alpha)) continue;
    members.push_back({alpha, Family::Extra, std::nullopt, num, den});
  }

  std::map<Rational, SetEntry> merged;
  for (const FamilyElement& fe : members) merge_element(merged, fe);

  KorseltSet set{pr, {}};
  set.elements.reserve(merged.size());
  for (auto& [alpha, entry] : merged) set.elements.push_back(std::move(entry));
  return set;
}

std::vector<std::int64_t> closed_form_z_ks(const SemiprimePair& pr) {
  if (pr.q > 2 * pr.p)
    throw std::domain_error(
        "closed_form_z_ks: the theorem covers q < 2p only; use the oracle");
  const std::array<std::int64_t, 2> primes{pr.p, pr.q};
  std::vector<std::int64_t> out;
  const auto admit = [&](std::int64_t a) {
    if (check_base(pr.n, primes, Rational(a, 1))) out.push_back(a);
  };
  for (std::int64_t dq : divisor_set(pr.q - 1))
    for (int eps : {+1, -1})
      if (divides(Wide(pr.s) - Wide(eps) * dq, pr.p - 1)) admit(pr.p + eps * dq);
  if (divides(pr.p - pr.s, pr.p - 1)) admit(2 * pr.p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace korselt
