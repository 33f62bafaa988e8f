#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "invcensus/census.hpp"
#include "invcensus/characters.hpp"
#include "invcensus/factorizer.hpp"
#include "invcensus/kronecker.hpp"
#include "invcensus/molien.hpp"
#include "invcensus/parallel.hpp"
#include "invcensus/series_io.hpp"

namespace invcensus::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Outcome {
  json input;
  json result;
  std::string text;
  int status = 0;
  std::string diagnostic;  // written to err, even on success
};

std::string degree_list(const std::vector<int>& degrees) {
  std::string s = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s + "}";
}

std::string coefficient_list(const Series& s) {
  std::string out = "[";
  for (int i = 0; i <= s.truncation_degree(); ++i) {
    if (i) out += ",";
    out += s[i].str();
  }
  return out + "]";
}

json series_payload(const Series& s) {
  json j = series_to_json(s);
  j["rendered"] = format_series(s);
  return j;
}

void write_series_if_requested(const std::string& path, const Series& s) {
  if (!path.empty()) write_series_file(path, s);
}

struct CensusArgs {
  int n1 = 2;
  int n2 = 2;
  int max_degree = 12;
  bool check = false;
  std::string output_series;
};

Outcome do_census(const CensusArgs& a) {
  const CensusProblem problem(a.n1, a.n2);
  const Series f = generating_series(problem, a.max_degree);
  write_series_if_requested(a.output_series, f);
  Outcome o;
  o.input = {{"n1", a.n1}, {"n2", a.n2}, {"max_degree", a.max_degree}};
  o.result = series_payload(f);
  o.result["sigma_bound"] = problem.sigma_bound();
  o.text = "F(q) = " + format_series(f) + "\ncoefficients: " + coefficient_list(f) + "\n";
  return o;
}

Outcome do_molien(const CensusArgs& a) {
  const CensusProblem problem(a.n1, a.n2);
  const Series p = molien_series(problem, a.max_degree);
  write_series_if_requested(a.output_series, p);
  Outcome o;
  o.input = {{"n1", a.n1}, {"n2", a.n2}, {"max_degree", a.max_degree}, {"check", a.check}};
  o.result = series_payload(p);
  o.text = "P(z) = " + format_series(p, "z") + "\ncoefficients: " + coefficient_list(p) + "\n";
  if (a.check) {
    const Series f = generating_series(problem, a.max_degree);
    const auto diff = compare(p, f);
    json check = {{"agree", !diff.has_value()}};
    if (diff) {
      check["first_mismatch"] = {{"degree", diff->degree},
                                 {"molien", integer_to_json(diff->left)},
                                 {"census", integer_to_json(diff->right)}};
      const std::string msg = "census agreement: MISMATCH at degree " +
                              std::to_string(diff->degree) + " (molien " + diff->left.str() +
                              ", census " + diff->right.str() + ")";
      o.text += msg + "\n";
      o.diagnostic = msg;
      o.status = 3;
    } else {
      o.text += "census agreement: OK\n";
    }
    o.result["census_check"] = check;
  }
  return o;
}

Outcome do_kron(const std::string& lhs, const std::string& rhs) {
  const Partition lambda = parse_partition(lhs);
  const Partition mu = parse_partition(rhs);
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("weights differ: " + lhs + " has weight " +
                                std::to_string(lambda.weight()) + ", " + rhs + " has weight " +
                                std::to_string(mu.weight()));
  }
  const SchurExpansion e = inner_product_expansion(lambda, mu);
  Outcome o;
  o.input = {{"lambda", format_partition(lambda)}, {"mu", format_partition(mu)}};
  json terms = json::array();
  for (const auto& [p, m] : e.terms) {
    terms.push_back({{"partition", format_partition(p)}, {"multiplicity", integer_to_json(m)}});
    o.text += "{" + format_partition(p) + "}: " + m.str() + "\n";
  }
  o.result = {{"weight", e.weight}, {"terms", terms}, {"rendered", format_expansion(e)}};
  return o;
}

Outcome do_char(const std::string& lhs, const std::string& rhs) {
  const Partition lambda = parse_partition(lhs);
  const Partition mu = parse_partition(rhs);
  const Integer v = character(lambda, mu);
  Outcome o;
  o.input = {{"lambda", format_partition(lambda)}, {"mu", format_partition(mu)}};
  o.result = {{"value", integer_to_json(v)}};
  o.text = v.str() + "\n";
  return o;
}

Outcome do_table(int n) {
  const auto table = char_table(n);
  Outcome o;
  o.input = {{"n", n}};
  json labels = json::array();
  for (const auto& p : table->partitions()) labels.push_back(format_partition(p));
  json rows = json::array();
  std::size_t label_width = 1, value_width = 1;
  for (const auto& p : table->partitions()) label_width = std::max(label_width, format_partition(p).size());
  for (const auto& v : table->values()) value_width = std::max(value_width, v.str().size());
  value_width = std::max(value_width, label_width);
  std::ostringstream text;
  text << std::setw(static_cast<int>(label_width)) << "" << " |";
  for (const auto& p : table->partitions()) {
    text << ' ' << std::setw(static_cast<int>(value_width)) << format_partition(p);
  }
  text << "\n";
  for (std::size_t r = 0; r < table->size(); ++r) {
    json row = json::array();
    text << std::setw(static_cast<int>(label_width)) << format_partition(table->partitions()[r]) << " |";
    for (std::size_t c = 0; c < table->size(); ++c) {
      row.push_back(integer_to_json(table->at(r, c)));
      text << ' ' << std::setw(static_cast<int>(value_width)) << table->at(r, c).str();
    }
    rows.push_back(std::move(row));
  }
  o.result = {{"n", n}, {"partitions", labels}, {"values", rows}};
  o.text = text.str();
  return o;
}

struct FactorArgs {
  std::string series_file;
  std::optional<int> free_generators;
  int max_factor_degree = 9;
  int max_total_factors = 9;
  int limit = 25;
};

Outcome do_factor(const FactorArgs& a) {
  const Series target = read_series_file(a.series_file);
  SearchConstraints c;
  c.free_generators = a.free_generators;
  c.max_factor_degree = a.max_factor_degree;
  c.max_total_factors = a.max_total_factors;
  const auto reports = search_candidates(target, c);

  Outcome o;
  o.input = {{"series_file", a.series_file},
             {"free_generators", a.free_generators ? json(*a.free_generators) : json(nullptr)},
             {"max_factor_degree", a.max_factor_degree},
             {"max_total_factors", a.max_total_factors},
             {"limit", a.limit}};
  const std::size_t shown =
      a.limit > 0 ? std::min<std::size_t>(reports.size(), static_cast<std::size_t>(a.limit)) : reports.size();
  json list = json::array();
  std::ostringstream text;
  text << reports.size() << " candidate(s) for target truncated at degree "
       << target.truncation_degree() << (shown < reports.size() ? ", showing " + std::to_string(shown) : "")
       << "\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& r = reports[i];
    json item = {{"rank", i + 1},
                 {"numerator_degrees", r.candidate.numerator_degrees},
                 {"denominator_degrees", r.candidate.denominator_degrees},
                 {"free_generators", r.candidate.free_generator_count()},
                 {"total_invariants", r.candidate.total_invariant_count()},
                 {"match_degree", r.match_degree},
                 {"numerator_nonnegative_through", r.numerator_nonnegative_through},
                 {"numerator_factored", r.numerator_factored},
                 {"degree_one_anchored", r.degree_one_anchored},
                 {"low_degrees_free", r.low_degrees_free},
                 {"numerator_series", series_to_json(r.numerator)["coefficients"]}};
    text << "#" << i + 1 << " num " << degree_list(r.candidate.numerator_degrees) << " den "
         << degree_list(r.candidate.denominator_degrees) << " free "
         << r.candidate.free_generator_count() << " total " << r.candidate.total_invariant_count()
         << " match " << r.match_degree;
    if (r.first_mismatch) {
      item["first_mismatch"] = {{"degree", r.first_mismatch->degree},
                                {"candidate", integer_to_json(r.first_mismatch->left)},
                                {"target", integer_to_json(r.first_mismatch->right)}};
      text << " mismatch@" << r.first_mismatch->degree << " (" << r.first_mismatch->left << " vs "
           << r.first_mismatch->right << ")";
    } else {
      item["first_mismatch"] = nullptr;
    }
    if (!r.numerator_factored) text << " numerator " << coefficient_list(r.numerator);
    text << "\n";
    list.push_back(std::move(item));
  }
  o.result = {{"candidate_count", reports.size()}, {"candidates", list}};
  o.text = text.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact census of local unitary invariants of bipartite density matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 0;
  int degree_limit = resource_limits().max_degree;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "Character table cache directory (overrides INVCENSUS_CACHE)");
  app.add_option("--threads", threads, "Maximum worker threads (0 = hardware)");
  app.add_option("--degree-limit", degree_limit, "Largest degree / symmetric group order allowed")
      ->check(CLI::NonNegativeNumber);

  std::function<Outcome()> action;
  std::string command;

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Count invariants F_0..F_D via Kronecker products");
  census->add_option("--n1", census_args.n1, "First subsystem dimension")->check(CLI::PositiveNumber);
  census->add_option("--n2", census_args.n2, "Second subsystem dimension")->check(CLI::PositiveNumber);
  census->add_option("--max-degree", census_args.max_degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  census->add_option("--output-series", census_args.output_series, "Also write a series file");
  census->callback([&] {
    command = "census";
    action = [&] { return do_census(census_args); };
  });

  CensusArgs molien_args;
  auto* molien = app.add_subcommand("molien", "Molien series by exact torus constant terms");
  molien->add_option("--n1", molien_args.n1, "First subsystem dimension")->check(CLI::PositiveNumber);
  molien->add_option("--n2", molien_args.n2, "Second subsystem dimension")->check(CLI::PositiveNumber);
  molien->add_option("--max-degree", molien_args.max_degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  molien->add_flag("--check", molien_args.check, "Compare against the census route");
  molien->add_option("--output-series", molien_args.output_series, "Also write a series file");
  molien->callback([&] {
    command = "molien";
    action = [&] { return do_molien(molien_args); };
  });

  std::string lhs, rhs;
  auto* kron = app.add_subcommand("kron", "Kronecker product expansion of two S_n irreducibles");
  kron->add_option("lambda", lhs, "Partition, e.g. 6,2")->required();
  kron->add_option("mu", rhs, "Partition, e.g. 5,3")->required();
  kron->callback([&] {
    command = "kron";
    action = [&] { return do_kron(lhs, rhs); };
  });

  auto* chr = app.add_subcommand("char", "Character value chi^lambda(mu)");
  chr->add_option("lambda", lhs, "Irreducible")->required();
  chr->add_option("mu", rhs, "Cycle type")->required();
  chr->callback([&] {
    command = "char";
    action = [&] { return do_char(lhs, rhs); };
  });

  int table_n = 0;
  auto* table = app.add_subcommand("table", "Full character table of S_n");
  table->add_option("n", table_n, "Symmetric group degree")->required()->check(CLI::NonNegativeNumber);
  table->callback([&] {
    command = "table";
    action = [&] { return do_table(table_n); };
  });

  FactorArgs factor_args;
  auto* factor = app.add_subcommand("factor", "Search integrity-basis rational forms for a series");
  factor->add_option("series_file", factor_args.series_file, "Series JSON file")->required();
  factor->add_option("--free-generators", factor_args.free_generators, "Denominator size")
      ->check(CLI::PositiveNumber);
  factor->add_option("--max-factor-degree", factor_args.max_factor_degree, "Largest denominator degree")
      ->check(CLI::PositiveNumber);
  factor->add_option("--max-total-factors", factor_args.max_total_factors,
                     "Largest denominator size when --free-generators is absent")
      ->check(CLI::PositiveNumber);
  factor->add_option("--limit", factor_args.limit, "Candidates to print (0 = all)")
      ->check(CLI::NonNegativeNumber);
  factor->callback([&] {
    command = "factor";
    action = [&] { return do_factor(factor_args); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const ResourceLimits saved_limits = resource_limits();
  const unsigned saved_threads = thread_limit();
  const auto saved_dir = char_table_cache().directory();
  struct Restore {
    std::function<void()> fn;
    ~Restore() { fn(); }
  } restore{[&] {
    resource_limits() = saved_limits;
    thread_limit() = saved_threads;
    char_table_cache().set_directory(saved_dir);
  }};

  resource_limits().max_degree = degree_limit;
  if (threads > 0) thread_limit() = threads;
  if (!cache_dir.empty()) {
    char_table_cache().set_directory(std::filesystem::path(cache_dir));
  } else if (const char* env = std::getenv("INVCENSUS_CACHE"); env && *env) {
    char_table_cache().set_directory(std::filesystem::path(env));
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (format == "json") {
    json envelope = {{"command", command},
                     {"input", outcome.input},
                     {"result", outcome.result},
                     {"versions", {{"tool", kToolVersion}, {"cache_format", kCharTableFormatVersion}}},
                     {"timing", {{"wall_ms", elapsed.count()}}}};
    out << envelope.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  if (!outcome.diagnostic.empty()) err << outcome.diagnostic << "\n";
  return outcome.status;
}

}  // namespace invcensus::cli
