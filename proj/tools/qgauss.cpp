// Command-line front end: run closed-form/oracle verifications, tabulate
// the square-full power-mean identity, or run the module self-test.
//
// Exit codes: 0 all cases match, 1 any mismatch, 2 invalid input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgauss/qgauss.hpp"

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw qgauss::hypothesis_error("range must look like LO:HI, got '" + s + "'");
  return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

struct RawOptions {
  std::optional<std::int64_t> q;
  std::string q_list;
  std::optional<std::int64_t> p;
  std::string p_list;
  std::optional<std::int64_t> m;
  std::string m_range;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_max;
  std::optional<int> alpha;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> a;
  std::string backend = "auto";
  std::string format;
  std::optional<double> tolerance;
  int parallel = 1;
  bool timings = false;
};

void add_grid_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--q", raw.q, "modulus q (odd)");
  cmd->add_option("--q-list", raw.q_list, "comma-separated list of moduli");
  cmd->add_option("--p", raw.p, "odd prime p");
  cmd->add_option("--p-list", raw.p_list, "comma-separated list of odd primes");
  cmd->add_option("--m", raw.m, "moment order m");
  cmd->add_option("--m-range", raw.m_range, "moment range LO:HI");
  cmd->add_option("--n", raw.n, "numerator parameter n (or u)");
  cmd->add_option("--n-max", raw.n_max, "sweep tuple length n from 1 to this value");
  cmd->add_option("--alpha", raw.alpha, "prime-power exponent alpha");
  cmd->add_option("--k", raw.k, "index/power parameter k");
  cmd->add_option("--a", raw.a, "residue parameter a");
  cmd->add_option("--backend", raw.backend, "exact | float | auto (default auto)")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  cmd->add_option("--format", raw.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--tolerance", raw.tolerance, "absolute float tolerance override");
  cmd->add_option("--parallel", raw.parallel, "worker count (default 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", raw.timings, "fill elapsed_ms (breaks byte-stable output)");
}

qgauss::VerifyOptions make_options(const RawOptions& raw, qgauss::OutputFormat default_format) {
  qgauss::VerifyOptions o;
  if (raw.q) o.q_list.push_back(*raw.q);
  for (std::int64_t q : parse_int_list(raw.q_list)) o.q_list.push_back(q);
  if (raw.p) o.p_list.push_back(*raw.p);
  for (std::int64_t p : parse_int_list(raw.p_list)) o.p_list.push_back(p);
  o.m = raw.m;
  if (!raw.m_range.empty()) o.m_range = parse_range(raw.m_range);
  o.n = raw.n;
  o.n_max = raw.n_max;
  o.alpha = raw.alpha;
  o.k = raw.k;
  o.a = raw.a;
  o.backend = raw.backend;
  o.tolerance = raw.tolerance;
  o.parallel = raw.parallel;
  o.timings = raw.timings;
  o.format = default_format;
  if (raw.format == "json") o.format = qgauss::OutputFormat::json;
  if (raw.format == "csv") o.format = qgauss::OutputFormat::csv;
  if (raw.format == "text") o.format = qgauss::OutputFormat::text;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of power-mean identities for generalized quadratic Gauss sums"};
  app.require_subcommand(1);

  RawOptions verify_raw;
  std::string claim;
  CLI::App* verify = app.add_subcommand(
      "verify", "run one claim's closed-form/oracle pair over a parameter grid");
  verify->add_option("claim", claim, "one of: theorem1 lemma9 t-sum quad-sum count inner-sum "
                                     "a-sum gauss-square multiplicativity zhang-p4 zhang-p6 "
                                     "zhang-liu bounds")
      ->required();
  add_grid_options(verify, verify_raw);

  RawOptions table_raw;
  CLI::App* table = app.add_subcommand(
      "table", "tabulate the square-full power-mean closed form against the oracle");
  add_grid_options(table, table_raw);

  int selftest_parallel = 1;
  std::string inject_fault;
  CLI::App* selftest = app.add_subcommand("selftest", "run the full invariant suite of every module");
  selftest->add_option("--parallel", selftest_parallel, "worker count (default 1)")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--inject-fault", inject_fault, "force the named suite to fail (test hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      const qgauss::VerifyOptions options = make_options(verify_raw, qgauss::OutputFormat::text);
      return qgauss::run_verify(claim, options, std::cout).exit_code;
    }
    if (table->parsed()) {
      const qgauss::VerifyOptions options = make_options(table_raw, qgauss::OutputFormat::csv);
      return qgauss::run_table(options, std::cout).exit_code;
    }
    if (selftest->parsed()) return qgauss::run_selftest(selftest_parallel, inject_fault, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
