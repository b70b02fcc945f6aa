#include "cli.hpp"

#include "ldic/bounds.hpp"
#include "ldic/constructions.hpp"
#include "ldic/errors.hpp"
#include "ldic/graph.hpp"
#include "ldic/index_code.hpp"
#include "ldic/rational.hpp"
#include "ldic/search.hpp"
#include "ldic/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ldic::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw ParseError("cannot write " + path);
  }
}

SideInformationGraph load_graph(const RunConfig& config) {
  if (config.graph_path.empty()) {
    throw PreconditionError("--graph is required");
  }
  return parse_graph(read_file(config.graph_path));
}

IndexCode load_code(const RunConfig& config) {
  if (config.code_path.empty()) {
    throw PreconditionError("--code is required");
  }
  return code_from_json(read_file(config.code_path));
}

PrimeField field_of(const RunConfig& config) {
  if (!is_prime(config.q)) {
    throw PreconditionError("q = " + std::to_string(config.q) + " is not prime");
  }
  return PrimeField(config.q);
}

std::string join(const std::vector<int>& values, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    s += (k == 0 ? "" : sep) + std::to_string(values[k]);
  }
  return s;
}

std::string profile_line(const LocalityProfile& p) {
  return "beta=" + to_string(p.rate) + " r=" + to_string(p.max) + " r_avg=" + to_string(p.average);
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& content) {
  if (config.out.empty()) {
    out << content;
  } else {
    write_file(config.out, content);
  }
}

std::uint64_t budget_or(const RunConfig& config, std::uint64_t fallback) {
  if (config.budget && *config.budget == 0) {
    throw PreconditionError("--budget must be positive");
  }
  return config.budget.value_or(fallback);
}

void print_code_summary(const IndexCode& code, std::ostream& out) {
  const LocalityProfile p = locality_profile(code);
  out << profile_line(p) << "\n";
  out << "localities=";
  for (std::size_t i = 0; i < p.per_receiver.size(); ++i) {
    out << (i == 0 ? "" : ",") << to_string(p.per_receiver[i]);
  }
  out << "\n";
}

} // namespace

int cmd_minrank(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  const MinrankResult result = minrank_bruteforce(g, field_of(config), budget_or(config, kDefaultMinrankBudget));
  const std::string path = config.out.empty() ? "minrank_witness.json" : config.out;
  write_file(path, fitting_matrix_to_json(result.witness));
  out << "minrank=" << result.value << "\n";
  out << "witness=" << path << "\n";
  return kOk;
}

int cmd_construct(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  const PrimeField field = field_of(config);
  if (config.M < 1) {
    throw PreconditionError("--M must be >= 1");
  }
  const std::string& scheme = config.scheme;
  auto require_cycle = [&] {
    if (!is_directed_cycle(g)) {
      throw PreconditionError("scheme " + scheme + " requires a directed cycle graph");
    }
  };

  std::optional<IndexCode> code;
  bool heuristic = false;
  if (scheme == "uncoded") {
    code = uncoded(g, config.M, field);
  } else if (scheme == "cycle-scalar") {
    require_cycle();
    if (config.M != 1) {
      throw PreconditionError("scheme cycle-scalar is scalar; use cycle-vector for M > 1");
    }
    code = cycle_scalar_code(g.size(), field, config.anchor);
  } else if (scheme == "cycle-vector") {
    require_cycle();
    CycleVectorCode cv = cycle_vector_code(g.size(), field, config.M);
    heuristic = cv.heuristic;
    code = std::move(cv.code);
  } else if (scheme == "deficit") {
    if (config.M != 1) {
      throw PreconditionError("scheme deficit is scalar; M must be 1");
    }
    code = minrank_deficit_code(g, field);
  } else {
    throw PreconditionError("unknown scheme '" + scheme + "' (uncoded, cycle-scalar, cycle-vector, deficit)");
  }

  if (config.out.empty()) {
    out << code_to_json(*code);
  } else {
    write_file(config.out, code_to_json(*code));
  }
  out << profile_line(locality_profile(*code)) << "\n";
  if (heuristic) {
    out << "note=heuristic schedule\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  const IndexCode code = load_code(config);
  if (!config.graph_path.empty() && code.receivers() != g.size()) {
    throw StructuralError("code has N=" + std::to_string(code.receivers()) + ", graph has N=" +
                          std::to_string(g.size()));
  }
  const VerifyResult result = verify_decodable(g, code);
  if (!result.decodable()) {
    out << "FAIL\n";
    for (const auto& [i, j] : result.failures) {
      out << "undecodable (" << i << "," << j << ")\n";
    }
    return kDecodeFail;
  }

  out << "PASS\n";
  const DecodingPlan& plan = *result.plan;
  const int M = code.message_length();
  for (int i = 1; i <= code.receivers(); ++i) {
    out << "rx " << i << " R={" << join(code.queries(i)) << "} decodes={";
    for (int m = 1; m <= M; ++m) {
      out << (m == 1 ? "" : ",") << plan.witness(i, m).symbol;
    }
    out << "}\n";
  }
  print_code_summary(code, out);

  ConverseOptions options;
  options.minrank_budget = budget_or(config, kDefaultMinrankBudget);
  const ConverseReport report = converse_checks(g, code, plan, options);
  for (const CheckResult& c : report.checks) {
    out << c.name;
    if (c.status == CheckStatus::NotApplicable) {
      out << " n/a";
      if (!c.note.empty()) {
        out << " (" << c.note << ")";
      }
    } else {
      out << " slack=" << to_string(c.slack) << " lhs=" << to_string(c.lhs) << " rhs=" << to_string(c.rhs);
      if (c.status == CheckStatus::Violated) {
        out << " VIOLATED";
      }
    }
    if (!c.subset.empty()) {
      out << " S={" << join(c.subset) << "}";
    }
    out << "\n";
  }
  return kOk;
}

int cmd_profile(const RunConfig& config, std::ostream& out) {
  const IndexCode code = load_code(config);
  print_code_summary(code, out);
  return kOk;
}

int cmd_tradeoff(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  if (g.size() < 3) {
    throw PreconditionError("trade-off needs N >= 3");
  }
  if (!is_directed_cycle(g)) {
    throw PreconditionError("closed form only proven for directed cycles");
  }
  const int N = g.size();
  std::string csv = "r,beta_star\n";
  if (config.r) {
    const Rational r = parse_rational(*config.r);
    csv += to_string(r) + "," + to_string(cycle_tradeoff(N, r)) + "\n";
  } else {
    for (int k = 0; k <= N; ++k) {
      const Rational r = Rational(1) + Rational(k, N);
      csv += to_string(r) + "," + to_string(cycle_tradeoff(N, r)) + "\n";
    }
  }
  emit(config, out, csv);
  return kOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  const PrimeField field = field_of(config);
  if (config.M < 1) {
    throw PreconditionError("--M must be >= 1");
  }
  if (config.ell < 1) {
    throw PreconditionError("--ell (maximum code length) must be >= 1");
  }
  std::optional<Rational> cap;
  if (config.r) {
    cap = parse_rational(*config.r);
    if (*cap < 1) {
      throw PreconditionError("--r must be >= 1");
    }
  }
  SearchOptions options;
  options.budget = budget_or(config, kDefaultSearchBudget);
  options.threads = config.threads;

  std::vector<ParetoPoint> all;
  for (int ell = 1; ell <= config.ell; ++ell) {
    std::vector<ParetoPoint> points = config.M == 1
                                          ? exhaustive_scalar_search(g, field, ell, cap, options)
                                          : exhaustive_vector_search(g, field, config.M, ell, cap, options);
    for (ParetoPoint& p : points) {
      all.push_back(std::move(p));
    }
  }
  const std::vector<ParetoPoint> frontier = pareto_frontier(std::move(all));

  std::string stem = "oracle";
  if (!config.out.empty()) {
    std::filesystem::path p(config.out);
    stem = (p.parent_path() / p.stem()).string();
  }
  std::string csv = "beta,r,r_avg,witness_file\n";
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    const ParetoPoint& p = frontier[k];
    const std::string witness = stem + "_w" + std::to_string(k + 1) + ".json";
    write_file(witness, code_to_json(p.witness));
    csv += to_string(p.beta) + "," + to_string(p.r) + "," + to_string(p.r_avg) + "," + witness + "\n";
  }
  emit(config, out, csv);
  return kOk;
}

int cmd_normalize(const RunConfig& config, std::ostream& out) {
  const SideInformationGraph g = load_graph(config);
  const IndexCode code = load_code(config);
  if (code.receivers() != g.size()) {
    throw StructuralError("code has N=" + std::to_string(code.receivers()) + ", graph has N=" +
                          std::to_string(g.size()));
  }
  const IndexCode normalized = normalize_unique_columns(g, prune_queries(g, code));
  if (config.out.empty()) {
    out << code_to_json(normalized);
  } else {
    write_file(config.out, code_to_json(normalized));
  }
  out << profile_line(locality_profile(normalized)) << "\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Locally decodable linear index codes"};
  app.require_subcommand(1);

  auto add_options = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "side-information graph file");
    sub->add_option("--code", config.code_path, "code JSON file");
    sub->add_option("--q", config.q, "field size (prime)");
    sub->add_option("--M", config.M, "message length");
    sub->add_option("--r", config.r, "locality, exact rational p/q");
    sub->add_option("--ell", config.ell, "code length (maximum for oracle)");
    sub->add_option("--scheme", config.scheme, "uncoded | cycle-scalar | cycle-vector | deficit");
    sub->add_option("--anchor", config.anchor, "anchor receiver for cycle-scalar");
    sub->add_option("--budget", config.budget, "enumeration budget");
    sub->add_option("--threads", config.threads, "search threads (0 = auto)");
    sub->add_option("--out", config.out, "output file");
  };

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"minrank", "exact min-rank and a witness fitting matrix"},
      {"construct", "build a code and print its locality profile"},
      {"verify", "check decodability and converse inequalities"},
      {"profile", "locality profile of a code"},
      {"tradeoff", "closed-form rate-locality trade-off of a directed cycle"},
      {"oracle", "Pareto frontier by exhaustive search"},
      {"normalize", "prune queries and normalize uniquely queried columns"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_options(sub);
    sub->callback([&config, n = std::string(name)] { config.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (config.command == "minrank") {
      return cmd_minrank(config, out);
    }
    if (config.command == "construct") {
      return cmd_construct(config, out);
    }
    if (config.command == "verify") {
      return cmd_verify(config, out);
    }
    if (config.command == "profile") {
      return cmd_profile(config, out);
    }
    if (config.command == "tradeoff") {
      return cmd_tradeoff(config, out);
    }
    if (config.command == "oracle") {
      return cmd_oracle(config, out);
    }
    if (config.command == "normalize") {
      return cmd_normalize(config, out);
    }
    err << "error: unknown command\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
    return kStructural;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

} // namespace ldic::cli
