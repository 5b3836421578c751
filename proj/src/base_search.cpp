#include "korselt/base_search.hpp"

#include <stdexcept>

#include "korselt/core.hpp"

namespace korselt {

const char* search_filter_name(SearchFilter f) {
  switch (f) {
    case SearchFilter::All: return "all";
    case SearchFilter::Composite: return "composite";
    case SearchFilter::SquarefreeComposite: return "squarefree";
    case SearchFilter::Semiprime: return "semiprime";
  }
  return "?";
}

std::vector<std::int64_t> b_korselt_set(const Rational& alpha, std::int64_t limit,
                                        SearchFilter filter, const SpfTable& table) {
  if (alpha.is_zero())
    throw std::invalid_argument("b_korselt_set: alpha must be nonzero");
  if (limit < 2) throw std::invalid_argument("b_korselt_set: limit must be >= 2");
  if (table.limit() < limit)
    throw std::invalid_argument("b_korselt_set: sieve does not cover the limit");

  std::vector<std::int64_t> out;
  std::vector<std::int64_t> primes;
  for (std::int64_t m = 2; m <= limit; ++m) {
    primes.clear();
    const bool squarefree = table.distinct_primes(m, primes);
    const bool prime = primes.size() == 1 && primes[0] == m;
    switch (filter) {
      case SearchFilter::All:
        break;
      case SearchFilter::Composite:
        if (prime) continue;
        break;
      case SearchFilter::SquarefreeComposite:
        if (prime || !squarefree) continue;
        break;
      case SearchFilter::Semiprime:
        if (!squarefree || primes.size() != 2) continue;
        break;
    }
    if (check_base(m, primes, alpha)) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> b_korselt_set(const Rational& alpha, std::int64_t limit,
                                        SearchFilter filter,
                                        std::size_t sieve_budget_bytes) {
  if (limit < 2) throw std::invalid_argument("b_korselt_set: limit must be >= 2");
  const SpfTable table(limit, sieve_budget_bytes);
  return b_korselt_set(alpha, limit, filter, table);
}

std::size_t b_korselt_weight(const Rational& alpha, std::int64_t limit,
                             SearchFilter filter, std::size_t sieve_budget_bytes) {
  return b_korselt_set(alpha, limit, filter, sieve_budget_bytes).size();
}

}  // namespace korselt
