#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "korselt/report.hpp"

namespace {

korselt::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return korselt::OutputFormat::Json;
  if (name == "csv") return korselt::OutputFormat::Csv;
  return korselt::OutputFormat::Table;
}

korselt::SearchFilter parse_filter(const std::string& name) {
  if (name == "all") return korselt::SearchFilter::All;
  if (name == "squarefree") return korselt::SearchFilter::SquarefreeComposite;
  if (name == "semiprime") return korselt::SearchFilter::Semiprime;
  return korselt::SearchFilter::Composite;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (!out.empty()) out += " ";
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Korselt sets of a semiprime pq: a definitional brute-force oracle, "
      "the closed-form structure theorem, cross-validation sweeps, and "
      "fixed-base searches over integer ranges."};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(korselt::kToolName) + " " + korselt::kToolVersion);

  const std::vector<std::string> formats{"table", "json", "csv"};
  const std::vector<std::string> filters{"all", "composite", "squarefree", "semiprime"};

  korselt::QsetOptions qset;
  std::string qset_method = "closed";
  std::string qset_format = "table";
  auto* cmd_qset = app.add_subcommand(
      "qset", "Rational Korselt set Q-KS(pq) with family tags and witnesses");
  cmd_qset->add_option("p", qset.p, "first prime")->required();
  cmd_qset->add_option("q", qset.q, "second prime (p < q)")->required();
  cmd_qset->add_option("--method", qset_method, "closed|oracle|both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  cmd_qset->add_option("--format", qset_format, "table|json|csv")
      ->check(CLI::IsMember(formats));

  korselt::ZsetOptions zset;
  std::string zset_format = "table";
  auto* cmd_zset =
      app.add_subcommand("zset", "Integer Korselt set Z-KS(pq) (theorem for q<2p, "
                                 "oracle otherwise)");
  cmd_zset->add_option("p", zset.p, "first prime")->required();
  cmd_zset->add_option("q", zset.q, "second prime (p < q)")->required();
  cmd_zset->add_option("--format", zset_format, "table|json|csv")
      ->check(CLI::IsMember(formats));

  korselt::CheckOptions check;
  auto* cmd_check = app.add_subcommand(
      "check", "Test whether alpha is an N-Korselt base (exit 0 yes, 3 no)");
  cmd_check->add_option("n", check.n, "integer N >= 2")->required();
  cmd_check->add_option("alpha", check.alpha, "rational base, 'a/b' or integer")
      ->required();

  korselt::VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Cross-validate closed form vs oracle over all prime pairs "
                "p < q <= pmax (exit 2 on any mismatch)");
  cmd_verify->add_option("--pmax", verify.pmax, "upper bound for q")->required();
  cmd_verify->add_option("--jobs", verify.jobs, "worker threads (0 = all cores)");
  cmd_verify->add_option("--out", verify.out_path, "write JSON-lines reports here");

  korselt::TabulateOptions tabulate;
  std::string tabulate_format = "csv";
  auto* cmd_tabulate = app.add_subcommand(
      "tabulate", "Weight table (p,q,n,regime,q_weight,z_weight) for pairs up to pmax");
  cmd_tabulate->add_option("--pmax", tabulate.pmax, "upper bound for q")->required();
  cmd_tabulate->add_option("--format", tabulate_format, "table|json|csv")
      ->check(CLI::IsMember(formats));
  cmd_tabulate->add_option("--jobs", tabulate.jobs, "worker threads (0 = all cores)");
  cmd_tabulate->add_option("--out", tabulate.out_path, "write the table here");

  korselt::SearchBaseOptions search;
  std::string search_filter = "composite";
  std::string search_format = "table";
  auto* cmd_search = app.add_subcommand(
      "search-base", "All M <= limit admitting a fixed base alpha (Korselt set of "
                     "a base)");
  cmd_search->add_option("alpha", search.alpha, "rational base, 'a/b' or integer")
      ->required();
  cmd_search->add_option("--limit", search.limit, "search M in [2, limit]")
      ->required();
  cmd_search->add_option("--filter", search_filter, "all|composite|squarefree|semiprime")
      ->check(CLI::IsMember(filters));
  cmd_search->add_option("--format", search_format, "table|json|csv")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? korselt::kExitOk : korselt::kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_qset)) {
      qset.method = qset_method == "oracle"  ? korselt::QsetMethod::Oracle
                    : qset_method == "both" ? korselt::QsetMethod::Both
                                            : korselt::QsetMethod::Closed;
      qset.format = parse_format(qset_format);
      return korselt::run_qset(qset, std::cout, std::cerr);
    }
    if (app.got_subcommand(cmd_zset)) {
      zset.format = parse_format(zset_format);
      return korselt::run_zset(zset, std::cout, std::cerr);
    }
    if (app.got_subcommand(cmd_check))
      return korselt::run_check(check, std::cout, std::cerr);
    if (app.got_subcommand(cmd_verify)) {
      verify.command_line = join_args(argc, argv);
      return korselt::run_verify(verify, std::cout, std::cerr);
    }
    if (app.got_subcommand(cmd_tabulate)) {
      tabulate.format = parse_format(tabulate_format);
      return korselt::run_tabulate(tabulate, std::cout, std::cerr);
    }
    if (app.got_subcommand(cmd_search)) {
      search.filter = parse_filter(search_filter);
      search.format = parse_format(search_format);
      return korselt::run_search_base(search, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return korselt::kExitUsage;
  }
  return korselt::kExitUsage;
}
