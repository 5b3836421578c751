#include <algorithm>

#include "doctest.h"
#include "korselt/base_search.hpp"
#include "korselt/closed_form.hpp"
#include "korselt/core.hpp"

using namespace korselt;

namespace {

bool contains(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("worked memberships") {
  CHECK(contains(b_korselt_set(Rational(3, 2), 10, SearchFilter::All), 6));
  CHECK(contains(b_korselt_set(Rational(5, 1), 25, SearchFilter::Composite), 21));
  CHECK(b_korselt_weight(Rational(5, 1), 25, SearchFilter::Composite) >= 1);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(b_korselt_set(Rational(7, 3), 1, SearchFilter::All),
                  std::invalid_argument);
  CHECK_THROWS_AS(b_korselt_set(Rational(0, 1), 10, SearchFilter::All),
                  std::invalid_argument);
  const SpfTable small(10);
  CHECK_THROWS_AS(b_korselt_set(Rational(3, 2), 100, SearchFilter::All, small),
                  std::invalid_argument);
}

TEST_CASE("no semiprime exists below 6") {
  CHECK(b_korselt_weight(Rational(7, 2), 2, SearchFilter::Semiprime) == 0);
  CHECK(b_korselt_weight(Rational(7, 2), 5, SearchFilter::Semiprime) == 0);
}

TEST_CASE("with filter ALL every prime appears except alpha itself") {
  const auto primes = [] {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= 60; ++n)
      if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
    return out;
  }();

  const auto with_half = b_korselt_set(Rational(3, 2), 60, SearchFilter::All);
  for (std::int64_t p : primes) CHECK(contains(with_half, p));

  const auto with_five = b_korselt_set(Rational(5, 1), 60, SearchFilter::All);
  for (std::int64_t p : primes) CHECK(contains(with_five, p) == (p != 5));
}

TEST_CASE("results are monotone in the limit") {
  const auto small = b_korselt_set(Rational(9, 4), 300, SearchFilter::Composite);
  const auto large = b_korselt_set(Rational(9, 4), 900, SearchFilter::Composite);
  CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST_CASE("every member re-passes check_base") {
  const SpfTable table(2000);
  for (const Rational& alpha :
       {Rational(3, 2), Rational(9, 4), Rational(5, 1), Rational(2, 1)}) {
    std::vector<std::int64_t> primes;
    for (std::int64_t m : b_korselt_set(alpha, 2000, SearchFilter::Composite, table)) {
      primes.clear();
      table.distinct_primes(m, primes);
      REQUIRE(check_base(m, primes, alpha));
    }
  }
}

TEST_CASE("filters select the right moduli") {
  const Rational alpha(3, 2);
  const auto all = b_korselt_set(alpha, 200, SearchFilter::All);
  const auto composite = b_korselt_set(alpha, 200, SearchFilter::Composite);
  const auto squarefree = b_korselt_set(alpha, 200, SearchFilter::SquarefreeComposite);
  const auto semiprime = b_korselt_set(alpha, 200, SearchFilter::Semiprime);
  CHECK(std::includes(all.begin(), all.end(), composite.begin(), composite.end()));
  CHECK(std::includes(composite.begin(), composite.end(), squarefree.begin(),
                      squarefree.end()));
  CHECK(std::includes(squarefree.begin(), squarefree.end(), semiprime.begin(),
                      semiprime.end()));
  for (std::int64_t m : composite) CHECK_FALSE(is_prime(static_cast<std::uint64_t>(m)));
  const SpfTable table(200);
  std::vector<std::int64_t> primes;
  for (std::int64_t m : semiprime) {
    primes.clear();
    CHECK(table.distinct_primes(m, primes));
    CHECK(primes.size() == 2);
  }
}

TEST_CASE("integer membership for q < 2p agrees with the Z theorem") {
  for (auto [p, q] : {std::pair<int, int>{2, 3}, {3, 5}, {5, 7}, {7, 11},
                       {7, 13}, {11, 13}, {13, 17}, {13, 23}, {17, 19}}) {
    const SemiprimePair pr = SemiprimePair::make(p, q);
    const auto z = closed_form_z_ks(pr);
    for (std::int64_t a = 1; a <= pr.p + pr.q + 2; ++a) {
      const bool member =
          contains(b_korselt_set(Rational(a, 1), pr.n, SearchFilter::Semiprime), pr.n);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(a);
      CHECK(member == contains(z, a));
    }
  }
}
