#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "korselt/base_search.hpp"
#include "korselt/closed_form.hpp"
#include "korselt/core.hpp"

namespace korselt {

inline constexpr const char* kToolName = "korselt";
inline constexpr const char* kToolVersion = "1.0.0";

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitFalse = 3;

std::vector<std::int64_t> primes_up_to(std::int64_t pmax);
std::vector<SemiprimePair> prime_pairs_up_to(std::int64_t pmax);

// One oracle-vs-closed-form comparison.
struct VerifyReport {
  SemiprimePair pair;
  RegimeTag tag;
  std::size_t oracle_count = 0;
  std::size_t closed_count = 0;
  std::vector<Rational> missing_from_closed;
  std::vector<Rational> extra_in_closed;
  double elapsed_ms = 0.0;

  bool identical() const {
    return missing_from_closed.empty() && extra_in_closed.empty();
  }
};

struct RunManifest {
  std::string command;
  std::string version = kToolVersion;
  std::int64_t pmax = 0;
  std::size_t pairs_checked = 0;
  std::size_t mismatches = 0;
  double wall_ms = 0.0;
};

VerifyReport verify_pair(const SemiprimePair& pair);

// Reports for every prime pair p < q <= pmax, in (p, q) order. jobs = 0 means
// one worker per available core; the result does not depend on jobs.
std::vector<VerifyReport> verify_sweep(std::int64_t pmax, unsigned jobs);

struct WeightRow {
  SemiprimePair pair;
  RegimeTag tag;
  std::size_t q_weight = 0;
  std::size_t z_weight = 0;
};

std::vector<WeightRow> weight_table(std::int64_t pmax, unsigned jobs);

enum class OutputFormat { Table, Json, Csv };
enum class QsetMethod { Closed, Oracle, Both };

struct QsetOptions {
  std::int64_t p = 0;
  std::int64_t q = 0;
  QsetMethod method = QsetMethod::Closed;
  OutputFormat format = OutputFormat::Table;
};

struct ZsetOptions {
  std::int64_t p = 0;
  std::int64_t q = 0;
  OutputFormat format = OutputFormat::Table;
};

struct CheckOptions {
  std::int64_t n = 0;
  std::string alpha;
};

struct VerifyOptions {
  std::int64_t pmax = 0;
  unsigned jobs = 0;
  std::string out_path;  // empty: human-readable reports on stdout
  std::string command_line;
};

struct TabulateOptions {
  std::int64_t pmax = 0;
  OutputFormat format = OutputFormat::Csv;
  unsigned jobs = 0;
  std::string out_path;
};

struct SearchBaseOptions {
  std::string alpha;
  std::int64_t limit = 0;
  SearchFilter filter = SearchFilter::Composite;
  OutputFormat format = OutputFormat::Table;
};

// CLI entry points; each prints to out/err and returns the process exit code.
int run_qset(const QsetOptions& opt, std::ostream& out, std::ostream& err);
int run_zset(const ZsetOptions& opt, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_tabulate(const TabulateOptions& opt, std::ostream& out, std::ostream& err);
int run_search_base(const SearchBaseOptions& opt, std::ostream& out,
                    std::ostream& err);

}  // namespace korselt
