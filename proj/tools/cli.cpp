#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "densest/errors.hpp"
#include "densest/exact_flow.hpp"
#include "densest/flow_network.hpp"
#include "densest/greedy_peel.hpp"
#include "densest/io.hpp"
#include "densest/lp_cert.hpp"
#include "densest/oracle.hpp"

namespace densest::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kAlgoHelp =
    "Algorithm (default auto):\n"
    "  flow      exact bisection on min cuts; convex tables       [exact]\n"
    "  flow-eps  geometric search, needs --eps in (0,1)          [1-eps]\n"
    "  greedy    one-vertex peeling                              [1/r, convex]\n"
    "  para      batched peeling, needs --eps > 0                [1/(r(1+eps))]\n"
    "  concave   best single vertex; concave tables              [exact]\n"
    "  auto      flow if every table is convex, concave if every table is\n"
    "            concave, otherwise greedy with no guarantee";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string algo = "auto";
  std::string eps;
  bool trace = false;
  std::string removal_csv;
  std::string dimacs;
  std::string mode = "callback";
  std::string gen_format = "text";
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::size_t m = 15;
  std::size_t k = 3;
  std::string shape = "convex";
  std::uint64_t max_weight = 9;
};

// 12 significant digits for display; the exact value travels as a string.
double display(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value.to_double());
  return std::strtod(buffer, nullptr);
}

json base_summary(const WeightedHypergraph& instance) {
  const Hypergraph& g = instance.graph();
  return {{"n", g.vertex_count()},
          {"m", g.edge_count()},
          {"p", g.incidence_count()},
          {"r", g.rank()},
          {"psi", instance.total_weight().str()}};
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump() << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << doc.dump() << '\n';
}

template <typename Writer>
void write_file(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  writer(file);
}

Rational parse_eps(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError("--eps: cannot parse '" + text + "'");
  }
}

WeightedHypergraph load(const Options& opt, std::ostream& err) {
  if (opt.input.empty()) throw UsageError("--input is required");
  return load_instance_file(opt.input,
                            [&](const std::string& msg) { err << "warning: " << msg << '\n'; });
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> known = {"flow", "flow-eps", "greedy",
                                                 "para", "concave", "auto"};
  if (std::find(known.begin(), known.end(), opt.algo) == known.end()) {
    throw UsageError("unknown algorithm '" + opt.algo + "'");
  }
  std::optional<Rational> eps;
  if (!opt.eps.empty()) eps = parse_eps(opt.eps);
  if (opt.algo == "flow-eps") {
    if (!eps) throw UsageError("flow-eps requires --eps");
    if (eps->sign() <= 0 || *eps >= Rational(1)) {
      throw UsageError("flow-eps requires --eps in (0,1)");
    }
  }
  if (opt.algo == "para") {
    if (!eps) throw UsageError("para requires --eps");
    if (eps->sign() <= 0) throw UsageError("para requires --eps > 0");
  }

  const WeightedHypergraph instance = load(opt, err);
  std::string algo = opt.algo;
  if (algo == "auto") {
    if (instance.all_convex()) {
      algo = "flow";
    } else if (instance.all_concave()) {
      algo = "concave";
    } else {
      algo = "greedy";
      err << "warning: mixed convex/concave tables; greedy result carries no "
             "approximation guarantee\n";
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Solution solution;
  std::string guarantee;
  std::optional<SearchTrace> trace;
  std::vector<RemovalStep> order;
  if (algo == "flow") {
    auto [s, t] = solve_exact(instance);
    solution = std::move(s);
    trace = std::move(t);
    guarantee = "exact";
  } else if (algo == "flow-eps") {
    auto [s, t] = solve_eps(instance, *eps);
    solution = std::move(s);
    trace = std::move(t);
    guarantee = "1-eps";
  } else if (algo == "greedy") {
    auto [s, o] = solve_greedy(instance);
    solution = std::move(s);
    order = std::move(o);
    guarantee = instance.all_convex() ? "1/r" : "none";
  } else if (algo == "para") {
    solution = solve_para(instance, *eps).first;
    guarantee = "1/(r(1+eps))";
  } else {
    solution = solve_concave(instance);
    guarantee = "exact";
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  json doc = {{"algorithm", algo},
              {"density", solution.density.str()},
              {"density_approx", display(solution.density)},
              {"vertices", solution.vertices}};
  doc.update(base_summary(instance));
  doc["iterations"] = solution.iterations;
  doc["guarantee"] = guarantee;
  if (eps) doc["eps"] = eps->str();
  doc["elapsed_ms"] = elapsed;
  if (opt.trace && trace) doc["trace"] = json::parse(trace_to_json(*trace));
  emit(doc, opt.output, out);

  if (!opt.removal_csv.empty()) {
    if (algo != "greedy") throw UsageError("--removal-csv needs the greedy algorithm");
    write_file(opt.removal_csv, out,
               [&](std::ostream& s) { write_removal_csv(s, order); });
  }
  if (!opt.dimacs.empty()) {
    const FlowNetwork net = build_network(instance, solution.density);
    write_file(opt.dimacs, out, [&](std::ostream& s) { write_dimacs(s, net); });
  }
  return kOk;
}

int cmd_brute(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedHypergraph instance = load(opt, err);
  const auto start = std::chrono::steady_clock::now();
  const OracleResult result = brute_force(instance);
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  json doc = {{"algorithm", "brute"},
              {"density", result.best_density.str()},
              {"density_approx", display(result.best_density)},
              {"vertices", result.best_set}};
  doc.update(base_summary(instance));
  doc["iterations"] = (std::uint64_t{1} << instance.vertex_count()) - 1;
  doc["guarantee"] = "exact";
  doc["elapsed_ms"] = elapsed;
  emit(doc, opt.output, out);
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedHypergraph instance = load(opt, err);
  json doc = {{"valid", true}, {"shape", std::string(instance.shape_class())}};
  doc.update(base_summary(instance));
  emit(doc, opt.output, out);
  return kOk;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const auto shape = parse_table_shape(opt.shape);
  if (!shape) throw UsageError("unknown shape '" + opt.shape + "'");
  if (opt.gen_format != "text" && opt.gen_format != "json") {
    throw UsageError("unknown format '" + opt.gen_format + "'");
  }
  RandomSpec spec;
  spec.seed = opt.seed;
  spec.vertex_count = opt.n;
  spec.edge_count = opt.m;
  spec.max_edge_size = opt.k;
  spec.shape = *shape;
  spec.max_weight = opt.max_weight;
  WeightedHypergraph instance;
  try {
    instance = random_instance(spec);
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }
  write_file(opt.output, out, [&](std::ostream& s) {
    if (opt.gen_format == "json") {
      write_json(s, instance);
    } else {
      s << "# seed " << opt.seed << ", shape " << opt.shape << '\n';
      write_text(s, instance);
    }
  });
  return kOk;
}

int cmd_export_lp(const Options& opt, std::ostream& out, std::ostream& err) {
  LpExportMode mode;
  if (opt.mode == "callback") {
    mode = LpExportMode::kCallback;
  } else if (opt.mode == "full") {
    mode = LpExportMode::kFull;
  } else {
    throw UsageError("unknown LP export mode '" + opt.mode + "'");
  }
  const WeightedHypergraph instance = load(opt, err);
  // Render first so a size error leaves no partial file behind.
  std::ostringstream text;
  export_lp(text, instance, mode);
  write_file(opt.output, out, [&](std::ostream& s) { s << text.str(); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Densest sub-hypergraph under per-edge weight functions"};
  app.require_subcommand(1);
  Options opt;

  auto* solve = app.add_subcommand("solve", "Find a dense vertex set");
  solve->add_option("--input", opt.input, "Instance file (.json for JSON)")->required();
  solve->add_option("--algo", opt.algo, kAlgoHelp);
  solve->add_option("--eps", opt.eps, "Epsilon as a/b or decimal");
  solve->add_flag("--trace", opt.trace, "Include the threshold search trace");
  solve->add_option("--output", opt.output, "Result path (default stdout)");
  solve->add_option("--removal-csv", opt.removal_csv,
                    "Greedy removal order as CSV (rank,vertex,delta,density_after)");
  solve->add_option("--dimacs", opt.dimacs,
                    "Dump the flow network at the returned density (DIMACS)");

  auto* brute = app.add_subcommand("brute", "Exhaustive optimum (n <= 24)");
  brute->add_option("--input", opt.input, "Instance file")->required();
  brute->add_option("--output", opt.output, "Result path (default stdout)");

  auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
  validate->add_option("--input", opt.input, "Instance file")->required();
  validate->add_option("--output", opt.output, "Result path (default stdout)");

  auto* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--n", opt.n, "Vertex count");
  gen->add_option("--m", opt.m, "Edge count");
  gen->add_option("--k", opt.k, "Maximum edge size");
  gen->add_option("--shape", opt.shape, "convex | concave | mixed");
  gen->add_option("--max-weight", opt.max_weight, "Largest table value");
  gen->add_option("--format", opt.gen_format, "text | json");
  gen->add_option("--output", opt.output, "Instance path (default stdout)");

  auto* export_cmd = app.add_subcommand("export-lp", "Write the LP relaxation");
  export_cmd->add_option("--input", opt.input, "Instance file")->required();
  export_cmd->add_option("--output", opt.output, "LP path (default stdout)");
  export_cmd->add_option("--mode", opt.mode, "callback | full");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt, out, err);
    if (brute->parsed()) return cmd_brute(opt, out, err);
    if (validate->parsed()) return cmd_validate(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out);
    if (export_cmd->parsed()) return cmd_export_lp(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace densest::cli
