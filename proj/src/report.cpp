#include "korselt/report.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace korselt {

using nlohmann::json;

std::vector<std::int64_t> primes_up_to(std::int64_t pmax) {
  std::vector<std::int64_t> primes;
  if (pmax < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(pmax) + 1, false);
  for (std::int64_t i = 2; i <= pmax; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= pmax / i)
      for (std::int64_t j = i * i; j <= pmax; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<SemiprimePair> prime_pairs_up_to(std::int64_t pmax) {
  if (pmax > kMaxPrimeInput)
    throw std::invalid_argument("pmax is capped at 2^31 - 1");
  const auto primes = primes_up_to(pmax);
  std::vector<SemiprimePair> pairs;
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b)
      pairs.push_back(SemiprimePair::make(primes[a], primes[b]));
  return pairs;
}

VerifyReport verify_pair(const SemiprimePair& pair) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.pair = pair;
  report.tag = regime(pair);
  const KorseltSet oracle = oracle_q_ks(pair);
  const KorseltSet closed = closed_form_q_ks(pair);
  report.oracle_count = oracle.elements.size();
  report.closed_count = closed.elements.size();
  std::size_t a = 0, b = 0;
  while (a < oracle.elements.size() || b < closed.elements.size()) {
    if (b == closed.elements.size() ||
        (a < oracle.elements.size() &&
         oracle.elements[a].alpha < closed.elements[b].alpha)) {
      report.missing_from_closed.push_back(oracle.elements[a++].alpha);
    } else if (a == oracle.elements.size() ||
               closed.elements[b].alpha < oracle.elements[a].alpha) {
      report.extra_in_closed.push_back(closed.elements[b++].alpha);
    } else {
      ++a;
      ++b;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

namespace {

unsigned effective_jobs(unsigned jobs, std::size_t work_items) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::size_t>(jobs, std::max<std::size_t>(work_items, 1)));
}

template <typename Fn>
void parallel_for_index(std::size_t count, unsigned jobs, Fn fn) {
  jobs = effective_jobs(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::size_t z_weight_of(const SemiprimePair& pair) {
  if (pair.q < 2 * pair.p) return closed_form_z_ks(pair).size();
  return oracle_z_ks(pair).size();
}

std::int64_t to_int64(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::range_error("value " + to_string(v) + " exceeds 64-bit output range");
  return static_cast<std::int64_t>(v);
}

json rational_json(const Rational& r) {
  return json{{"num", to_int64(r.num())}, {"den", to_int64(r.den())}, {"display", r.str()}};
}

json witness_json(const DivisorWitness& w) {
  return json{{"dp", w.dp}, {"dq", w.dq}, {"eps", w.eps}};
}

json entry_json(const SetEntry& e) {
  json j = rational_json(e.alpha);
  j["families"] = family_names(e.families);
  json ws = json::array();
  for (const DivisorWitness& w : e.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

json set_json(const KorseltSet& set, const RegimeTag& tag) {
  json elements = json::array();
  for (const SetEntry& e : set.elements) elements.push_back(entry_json(e));
  return json{{"p", set.pair.p},     {"q", set.pair.q},
              {"n", set.pair.n},     {"regime", regime_str(tag.regime)},
              {"elements", elements}, {"weight", set.elements.size()}};
}

json report_json(const VerifyReport& r) {
  json missing = json::array();
  for (const Rational& m : r.missing_from_closed) missing.push_back(rational_json(m));
  json extra = json::array();
  for (const Rational& m : r.extra_in_closed) extra.push_back(rational_json(m));
  return json{{"p", r.pair.p},
              {"q", r.pair.q},
              {"n", r.pair.n},
              {"regime", regime_str(r.tag.regime)},
              {"oracle_count", r.oracle_count},
              {"closed_count", r.closed_count},
              {"identical", r.identical()},
              {"missing_from_closed", missing},
              {"extra_in_closed", extra},
              {"elapsed_ms", r.elapsed_ms}};
}

json manifest_json(const RunManifest& m) {
  return json{{"manifest",
               {{"tool", kToolName},
                {"version", m.version},
                {"command", m.command},
                {"pmax", m.pmax},
                {"pairs_checked", m.pairs_checked},
                {"mismatches", m.mismatches},
                {"wall_ms", m.wall_ms}}}};
}

std::string join_families(FamilyMask mask) {
  std::string out;
  for (const std::string& name : family_names(mask)) {
    if (!out.empty()) out += ",";
    out += name;
  }
  return out.empty() ? "-" : out;
}

std::string witness_str(const DivisorWitness& w) {
  return "(dp=" + std::to_string(w.dp) + ",dq=" + std::to_string(w.dq) +
         ",eps=" + (w.eps > 0 ? std::string("+1") : std::string("-1")) + ")";
}

std::string join_witnesses(const std::vector<DivisorWitness>& ws) {
  std::string out;
  for (const DivisorWitness& w : ws) {
    if (!out.empty()) out += " ";
    out += witness_str(w);
  }
  return out.empty() ? "-" : out;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "}";
}

void print_set_table(std::ostream& out, const KorseltSet& set, const RegimeTag& tag,
                     const char* method) {
  out << "Q-KS(" << set.pair.n << ")  p=" << set.pair.p << " q=" << set.pair.q
      << "  regime=" << regime_str(tag.regime) << "  method=" << method
      << "  weight=" << set.elements.size() << "\n";
  std::size_t alpha_w = 8, family_w = 8;
  for (const SetEntry& e : set.elements) {
    alpha_w = std::max(alpha_w, e.alpha.str().size() + 2);
    family_w = std::max(family_w, join_families(e.families).size() + 2);
  }
  for (const SetEntry& e : set.elements) {
    out << "  " << std::left << std::setw(static_cast<int>(alpha_w)) << e.alpha.str()
        << std::setw(static_cast<int>(family_w)) << join_families(e.families)
        << join_witnesses(e.witnesses) << "\n";
  }
}

void print_set_csv(std::ostream& out, const KorseltSet& set) {
  out << "p,q,num,den,display,families,witnesses\n";
  for (const SetEntry& e : set.elements) {
    std::string families;
    for (const std::string& name : family_names(e.families)) {
      if (!families.empty()) families += "+";
      families += name;
    }
    std::string witnesses;
    for (const DivisorWitness& w : e.witnesses) {
      if (!witnesses.empty()) witnesses += "|";
      witnesses += std::to_string(w.dp) + ":" + std::to_string(w.dq) + ":" +
                   std::to_string(w.eps);
    }
    out << set.pair.p << "," << set.pair.q << "," << to_string(e.alpha.num()) << ","
        << to_string(e.alpha.den()) << "," << e.alpha.str() << "," << families << ","
        << witnesses << "\n";
  }
}

}  // namespace

std::vector<VerifyReport> verify_sweep(std::int64_t pmax, unsigned jobs) {
  if (pmax < 3)
    throw std::invalid_argument("verify: pmax must be >= 3 (no prime pairs below it)");
  const auto pairs = prime_pairs_up_to(pmax);
  std::vector<VerifyReport> reports(pairs.size());
  parallel_for_index(pairs.size(), jobs,
                     [&](std::size_t i) { reports[i] = verify_pair(pairs[i]); });
  return reports;
}

std::vector<WeightRow> weight_table(std::int64_t pmax, unsigned jobs) {
  if (pmax < 3) throw std::invalid_argument("tabulate: pmax must be >= 3");
  const auto pairs = prime_pairs_up_to(pmax);
  std::vector<WeightRow> rows(pairs.size());
  parallel_for_index(pairs.size(), jobs, [&](std::size_t i) {
    rows[i].pair = pairs[i];
    rows[i].tag = regime(pairs[i]);
    rows[i].q_weight = closed_form_q_ks(pairs[i]).elements.size();
    rows[i].z_weight = z_weight_of(pairs[i]);
  });
  return rows;
}

int run_qset(const QsetOptions& opt, std::ostream& out, std::ostream& err) {
  SemiprimePair pair;
  try {
    pair = SemiprimePair::make(opt.p, opt.q);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const RegimeTag tag = regime(pair);

  if (opt.method == QsetMethod::Both) {
    const KorseltSet closed = closed_form_q_ks(pair);
    const KorseltSet oracle = oracle_q_ks(pair);
    const VerifyReport report = verify_pair(pair);
    if (opt.format == OutputFormat::Json) {
      json j{{"p", pair.p},
             {"q", pair.q},
             {"n", pair.n},
             {"regime", regime_str(tag.regime)},
             {"closed", set_json(closed, tag)},
             {"oracle", set_json(oracle, tag)},
             {"identical", report.identical()}};
      json missing = json::array();
      for (const Rational& m : report.missing_from_closed)
        missing.push_back(rational_json(m));
      json extra = json::array();
      for (const Rational& m : report.extra_in_closed)
        extra.push_back(rational_json(m));
      j["missing_from_closed"] = missing;
      j["extra_in_closed"] = extra;
      out << j.dump() << "\n";
    } else if (opt.format == OutputFormat::Csv) {
      print_set_csv(out, closed);
      out << "# identical=" << (report.identical() ? "true" : "false") << "\n";
    } else {
      print_set_table(out, closed, tag, "closed");
      out << "oracle weight=" << oracle.elements.size() << "\n";
      if (report.identical()) {
        out << "closed form and oracle sets are identical\n";
      } else {
        out << "MISMATCH missing_from_closed=" << join_rationals(report.missing_from_closed)
            << " extra_in_closed=" << join_rationals(report.extra_in_closed) << "\n";
      }
    }
    return report.identical() ? kExitOk : kExitMismatch;
  }

  KorseltSet set;
  const char* method_name;
  if (opt.method == QsetMethod::Oracle) {
    set = oracle_q_ks(pair);
    method_name = "oracle";
  } else {
    set = closed_form_q_ks(pair);
    method_name = "closed";
  }
  if (opt.format == OutputFormat::Json)
    out << set_json(set, tag).dump() << "\n";
  else if (opt.format == OutputFormat::Csv)
    print_set_csv(out, set);
  else
    print_set_table(out, set, tag, method_name);
  return kExitOk;
}

int run_zset(const ZsetOptions& opt, std::ostream& out, std::ostream& err) {
  SemiprimePair pair;
  try {
    pair = SemiprimePair::make(opt.p, opt.q);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const bool theorem = pair.q < 2 * pair.p;
  const std::vector<std::int64_t> values =
      theorem ? closed_form_z_ks(pair) : oracle_z_ks(pair);
  const char* source = theorem ? "theorem" : "oracle";

  if (opt.format == OutputFormat::Json) {
    json j{{"p", pair.p},       {"q", pair.q},
           {"n", pair.n},       {"source", source},
           {"elements", values}, {"weight", values.size()}};
    out << j.dump() << "\n";
  } else if (opt.format == OutputFormat::Csv) {
    out << "p,q,n,source,alpha\n";
    for (std::int64_t v : values)
      out << pair.p << "," << pair.q << "," << pair.n << "," << source << "," << v
          << "\n";
  } else {
    out << "Z-KS(" << pair.n << ")  p=" << pair.p << " q=" << pair.q
        << "  source=" << source << "  weight=" << values.size() << "\n";
    out << "{";
    for (std::size_t i = 0; i < values.size(); ++i)
      out << (i ? ", " : "") << values[i];
    out << "}\n";
    if (!theorem)
      out << "note: the closed-form Z theorem covers q < 2p; values above come "
             "from the definitional oracle\n";
  }
  return kExitOk;
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  constexpr std::int64_t kFactorBudget = 1'000'000'000'000'000;  // 10^15
  Rational alpha;
  try {
    alpha = parse_rational(opt.alpha);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (opt.n < 2) {
    err << "error: n must be >= 2\n";
    return kExitUsage;
  }
  if (opt.n > kFactorBudget) {
    err << "error: n exceeds the factorization budget (10^15)\n";
    return kExitUsage;
  }
  const auto primes = distinct_prime_divisors(opt.n);
  out << "N = " << opt.n << " =";
  for (std::size_t i = 0; i < primes.size(); ++i)
    out << (i ? " * " : " ") << primes[i];
  out << "\nalpha = " << alpha.str() << "\n";
  const Wide target = alpha.den() * Wide(opt.n) - alpha.num();
  bool all_ok = true;
  for (std::int64_t r : primes) {
    const Wide d = alpha.den() * Wide(r) - alpha.num();
    const bool ok = divides(d, target);
    all_ok = all_ok && ok;
    out << "  r=" << r << ": divides(" << to_string(d) << ", " << to_string(target)
        << ") -> " << (ok ? "yes" : "NO") << "\n";
  }
  const bool verdict = check_base(opt.n, primes, alpha);
  out << "result: " << (verdict ? "true" : "false");
  if (all_ok && !verdict)
    out << (alpha.is_zero() ? "  (alpha = 0 is excluded)" : "  (alpha = N is excluded)");
  out << "\n";
  return verdict ? kExitOk : kExitFalse;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.pmax < 3) {
    err << "error: --pmax must be >= 3 (no prime pairs otherwise)\n";
    return kExitUsage;
  }
  std::ofstream sink;
  const bool to_file = !opt.out_path.empty();
  if (to_file) {
    sink.open(opt.out_path);
    if (!sink) {
      err << "error: cannot open '" << opt.out_path << "' for writing\n";
      return kExitUsage;
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify_sweep(opt.pmax, opt.jobs);
  RunManifest manifest;
  manifest.command = opt.command_line.empty() ? "verify" : opt.command_line;
  manifest.pmax = opt.pmax;
  manifest.pairs_checked = reports.size();
  for (const VerifyReport& r : reports)
    if (!r.identical()) ++manifest.mismatches;
  manifest.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  for (const VerifyReport& r : reports) {
    if (to_file) {
      sink << report_json(r).dump() << "\n";
    } else {
      out << "p=" << r.pair.p << " q=" << r.pair.q
          << " regime=" << regime_str(r.tag.regime) << " oracle=" << r.oracle_count
          << " closed=" << r.closed_count;
      if (r.identical())
        out << " ok";
      else
        out << " MISMATCH missing=" << join_rationals(r.missing_from_closed)
            << " extra=" << join_rationals(r.extra_in_closed);
      out << "\n";
    }
  }
  if (to_file) {
    sink << manifest_json(manifest).dump() << "\n";
    if (!sink) {
      err << "error: write to '" << opt.out_path << "' failed\n";
      return kExitUsage;
    }
  }
  out << "verified " << manifest.pairs_checked << " pairs up to pmax=" << opt.pmax
      << ": " << manifest.mismatches << " mismatches (" << std::fixed
      << std::setprecision(1) << manifest.wall_ms << " ms)\n";
  out.unsetf(std::ios::fixed);
  return manifest.mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_tabulate(const TabulateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.pmax < 3) {
    err << "error: --pmax must be >= 3\n";
    return kExitUsage;
  }
  const auto rows = weight_table(opt.pmax, opt.jobs);
  std::ofstream sink;
  std::ostream* dest = &out;
  if (!opt.out_path.empty()) {
    sink.open(opt.out_path);
    if (!sink) {
      err << "error: cannot open '" << opt.out_path << "' for writing\n";
      return kExitUsage;
    }
    dest = &sink;
  }
  if (opt.format == OutputFormat::Json) {
    json arr = json::array();
    for (const WeightRow& r : rows)
      arr.push_back(json{{"p", r.pair.p},
                         {"q", r.pair.q},
                         {"n", r.pair.n},
                         {"regime", regime_str(r.tag.regime)},
                         {"q_weight", r.q_weight},
                         {"z_weight", r.z_weight}});
    *dest << arr.dump() << "\n";
  } else if (opt.format == OutputFormat::Table) {
    *dest << std::left << std::setw(8) << "p" << std::setw(8) << "q" << std::setw(12)
          << "n" << std::setw(10) << "regime" << std::setw(10) << "q_weight"
          << "z_weight\n";
    for (const WeightRow& r : rows)
      *dest << std::left << std::setw(8) << r.pair.p << std::setw(8) << r.pair.q
            << std::setw(12) << r.pair.n << std::setw(10) << regime_str(r.tag.regime)
            << std::setw(10) << r.q_weight << r.z_weight << "\n";
  } else {
    *dest << "p,q,n,regime,q_weight,z_weight\n";
    for (const WeightRow& r : rows)
      *dest << r.pair.p << "," << r.pair.q << "," << r.pair.n << ","
            << regime_str(r.tag.regime) << "," << r.q_weight << "," << r.z_weight
            << "\n";
  }
  if (dest == &sink && !sink) {
    err << "error: write to '" << opt.out_path << "' failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_search_base(const SearchBaseOptions& opt, std::ostream& out,
                    std::ostream& err) {
  Rational alpha;
  try {
    alpha = parse_rational(opt.alpha);
    if (alpha.is_zero())
      throw std::invalid_argument("alpha = 0 is excluded by the Korselt definition");
    const std::vector<std::int64_t> members =
        b_korselt_set(alpha, opt.limit, opt.filter);
    if (opt.format == OutputFormat::Json) {
      json j{{"alpha", rational_json(alpha)},
             {"limit", opt.limit},
             {"filter", search_filter_name(opt.filter)},
             {"elements", members},
             {"weight", members.size()}};
      out << j.dump() << "\n";
    } else if (opt.format == OutputFormat::Csv) {
      out << "alpha,limit,filter,element\n";
      for (std::int64_t m : members)
        out << alpha.str() << "," << opt.limit << "," << search_filter_name(opt.filter)
            << "," << m << "\n";
    } else {
      out << "B-KS(" << alpha.str() << ") over [2, " << opt.limit
          << "]  filter=" << search_filter_name(opt.filter)
          << "  weight=" << members.size() << "\n";
      out << "{";
      for (std::size_t i = 0; i < members.size(); ++i)
        out << (i ? ", " : "") << members[i];
      out << "}\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace korselt
