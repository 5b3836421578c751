#pragma once

#include <cstdint>
#include <vector>

#include "korselt/arith.hpp"
#include "korselt/rational.hpp"

namespace korselt {

enum class SearchFilter { All, Composite, SquarefreeComposite, Semiprime };

const char* search_filter_name(SearchFilter f);

// All M in [2, limit] passing the filter for which alpha is a K_M-base.
// Factorization comes from the supplied sieve (or one built to order).
// alpha must be nonzero and limit >= 2.
std::vector<std::int64_t> b_korselt_set(const Rational& alpha, std::int64_t limit,
                                        SearchFilter filter, const SpfTable& table);
std::vector<std::int64_t> b_korselt_set(
    const Rational& alpha, std::int64_t limit, SearchFilter filter,
    std::size_t sieve_budget_bytes = kDefaultSieveBudget);

std::size_t b_korselt_weight(const Rational& alpha, std::int64_t limit,
                             SearchFilter filter,
                             std::size_t sieve_budget_bytes = kDefaultSieveBudget);

}  // namespace korselt
