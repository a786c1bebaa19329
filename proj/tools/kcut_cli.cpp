#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kcut/baseline.hpp"
#include "kcut/decomposition.hpp"
#include "kcut/edge_list_io.hpp"
#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/kcut_dp.hpp"
#include "kcut/report.hpp"
#include "kcut/scheme.hpp"
#include "kcut/sparsifier.hpp"
#include "kcut/tree_packing.hpp"

using namespace kcut;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitTooLarge = 3;

struct RunArgs {
  std::string input;
  int k = 0;
  std::string mode;
  std::string epsilon;
  std::optional<std::int64_t> s;
  std::uint64_t seed = 0;
  int trees = 0;
  std::string emit_decomposition;
  bool json = false;
  bool timing = false;
};

struct GenerateArgs {
  std::string gen;
  Vertex n = 0;
  std::size_t m = 0;
  int k = 2;
  std::uint64_t seed = 0;
  std::size_t cross = 0;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Checks part count and weight before anything is printed.
void attach_partition(RunReport& report, const MultiGraph& g, const Partition& p, int k,
                      const Rational& claimed) {
  if (static_cast<int>(p.size()) != k || p.ground().size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::logic_error("partition does not have k parts over V");
  if (cut_weight(g, p) != claimed) throw std::logic_error("partition weight disagrees with the value");
  std::vector<int> labels = p.labels();
  report.partition.assign(labels.begin(), labels.end());
  report.value = format_rational(claimed);
}

nlohmann::ordered_json rational_json(const Rational& r) { return format_rational(r); }

RunReport run_approx(const MultiGraph& g, const RunArgs& args) {
  if (args.epsilon.empty()) throw InvalidInput("--mode approx needs --epsilon");
  Rational eps = parse_rational(args.epsilon);
  SchemeOptions options;
  options.packing_count = args.trees;
  SchemeResult r = solve(g, args.k, eps, args.seed, options);
  RunReport report;
  attach_partition(report, g, r.partition, args.k, r.value);
  const auto& st = r.stats;
  auto& j = report.stats;
  j["branch"] = st.branch;
  j["components"] = st.components;
  j["approx_weight"] = rational_json(st.approx_weight);
  j["epsilon_prime"] = rational_json(st.epsilon_prime);
  j["scale"] = rational_json(st.scale);
  j["q"] = st.removed_weight;
  j["strip_iterations"] = st.strip_iterations;
  j["p"] = st.rate;
  j["r"] = st.inverse_rate;
  j["s_star"] = st.sampled_value;
  j["s_max"] = st.sweep_bound;
  j["estimate"] = st.estimate;
  j["trees_used"] = st.trees_used;
  j["dp_entries"] = st.dp_entries;
  j["fallback"] = st.fallback;
  return report;
}

RunReport run_exact(const MultiGraph& g, const RunArgs& args) {
  if (!args.s) throw InvalidInput("--mode exact needs --s");
  TreeFamilyOptions tree_options;
  tree_options.packing_count = args.trees;
  tree_options.exhaustive = g.vertex_count() <= 8;
  auto trees = build_tree_family(g, args.k, tree_options);
  ExactOptions options;
  options.mode = SolveMode::construct;
  ExactResult r = solve_exact(g, args.k, *args.s, trees, options);
  RunReport report;
  report.s = *args.s;
  report.answer = r.yes;
  if (r.yes) attach_partition(report, g, *r.partition, args.k, Rational(r.value));
  report.stats["trees"] = trees.size();
  report.stats["trees_evaluated"] = r.trees_evaluated;
  report.stats["dp_entries"] = r.dp_entries;
  report.stats["decomposition_nodes"] = r.decomposition_nodes;
  return report;
}

RunReport run_oracle(const MultiGraph& g, const RunArgs& args) {
  if (g.vertex_count() > kOracleMaxVertices)
    throw OracleTooLarge("oracle handles at most " + std::to_string(kOracleMaxVertices) + " vertices");
  CutResult r = oracle_exact_kcut(g, args.k);
  RunReport report;
  attach_partition(report, g, r.partition, args.k, r.weight);
  return report;
}

RunReport run_decompose(const MultiGraph& g, const RunArgs& args) {
  if (!args.s) throw InvalidInput("--mode decompose needs --s");
  DecompositionLog log;
  TreeDecomposition td = build_unbreakable_decomposition(g, *args.s, &log);
  if (auto err = check_tree_decomposition(g, td)) throw std::logic_error("invalid decomposition: " + *err);
  RunReport report;
  report.s = *args.s;
  std::size_t width = 0;
  for (const auto& b : td.bags()) width = std::max(width, b.size());
  report.stats["nodes"] = td.size();
  report.stats["max_bag"] = width;
  report.stats["max_adhesion"] = max_adhesion(td);
  report.stats["refinements"] = log.refinements;
  report.stats["potentials"] = log.potentials;
  report.stats["decomposition"] = td.dump();
  return report;
}

RunReport run_sparsify(const MultiGraph& g, const RunArgs& args) {
  if (args.epsilon.empty()) throw InvalidInput("--mode sparsify needs --epsilon");
  Rational eps = parse_rational(args.epsilon);
  RunReport report;
  MultiGraph g1 = g;
  if (!g.is_multi()) {
    CutResult approx = approx2_kcut(g, args.k);
    if (approx.weight == 0) throw InvalidInput("graph already splits into k parts at no cost");
    RoundedGraph rounded = round_to_multigraph(g, eps, approx.weight / 2);
    report.stats["scale"] = rational_json(rounded.scale);
    g1 = rounded.graph;
  }
  StripResult strip = strip_cheap_2cuts(g1, args.k, eps, args.seed);
  report.stats["q"] = strip.removed_weight;
  report.stats["strip_iterations"] = strip.iterations;
  MultiGraph g2 = strip.graph;
  double r = 1.0;
  if (!strip.hit_k_components) {
    SampleResult sample = sample_edges(strip.graph, args.k, eps, args.seed);
    report.stats["p"] = sample.rate;
    report.stats["min_cut"] = sample.min_cut;
    r = sample.inverse_rate;
    g2 = std::move(sample.graph);
  }
  report.stats["r"] = r;
  report.stats["edge_list"] = to_edge_list(g2);
  return report;
}

void print_text(const RunReport& report) {
  if (report.answer) std::cout << "answer " << (*report.answer ? "yes" : "no") << '\n';
  if (report.value) std::cout << "value " << *report.value << '\n';
  if (!report.partition.empty()) {
    std::cout << "partition";
    for (int p : report.partition) std::cout << ' ' << p;
    std::cout << '\n';
  }
  for (const auto& [key, val] : report.stats.items()) {
    if (val.is_string() && val.get<std::string>().find('\n') != std::string::npos) {
      std::cout << key << ":\n" << val.get<std::string>();
    } else {
      std::cout << key << ' ' << val.dump() << '\n';
    }
  }
  if (report.wall_time_ms) std::cout << "wall_time_ms " << *report.wall_time_ms << '\n';
}

int run(const RunArgs& args) {
  auto start = std::chrono::steady_clock::now();
  std::string bytes = read_file(args.input);
  std::istringstream in(bytes);
  MultiGraph g = read_edge_list(in);
  if (args.k < 1 || args.k > g.vertex_count()) throw InvalidInput("--k must lie in [1, n]");

  RunReport report;
  if (args.mode == "approx") report = run_approx(g, args);
  else if (args.mode == "exact") report = run_exact(g, args);
  else if (args.mode == "oracle") report = run_oracle(g, args);
  else if (args.mode == "decompose") report = run_decompose(g, args);
  else report = run_sparsify(g, args);

  report.input_digest = fnv1a_hex(bytes);
  report.mode = args.mode;
  report.k = args.k;
  if (!args.epsilon.empty()) report.epsilon = format_rational(parse_rational(args.epsilon));
  report.seed = args.seed;
  if (args.s) report.s = *args.s;
  if (args.timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (!args.emit_decomposition.empty()) {
    if (!args.s) throw InvalidInput("--emit-decomposition needs --s");
    std::ofstream out(args.emit_decomposition);
    if (!out) throw InvalidInput("cannot write " + args.emit_decomposition);
    build_unbreakable_decomposition(g, *args.s).dump(out);
  }
  if (args.json) std::cout << report.to_json().dump(2) << '\n';
  else print_text(report);
  return 0;
}

int generate(const GenerateArgs& args) {
  std::ostringstream header;
  MultiGraph g;
  if (args.gen == "random") {
    g = random_multigraph(args.n, args.m, args.seed);
    header << "# random n=" << args.n << " m=" << args.m << " seed=" << args.seed << '\n';
  } else {
    PlantedGraph p = planted_multigraph(args.n, args.m, args.k, args.cross, args.seed);
    g = std::move(p.graph);
    header << "# planted n=" << args.n << " m=" << args.m << " k=" << args.k << " cross=" << args.cross
           << " seed=" << args.seed << '\n'
           << "# opt_upper_bound " << p.opt_upper_bound << '\n';
  }
  std::string text = header.str() + to_edge_list(g);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + args.output);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum k-cut toolkit"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "solve or inspect an instance");
  run_cmd->add_option("--input", run_args.input, "edge-list file")->required();
  run_cmd->add_option("--k", run_args.k, "number of parts")->required();
  run_cmd->add_option("--mode", run_args.mode)
      ->required()
      ->check(CLI::IsMember({"approx", "exact", "oracle", "decompose", "sparsify"}));
  run_cmd->add_option("--epsilon", run_args.epsilon, "accuracy, e.g. 1/2 or 0.2");
  run_cmd->add_option("--s", run_args.s, "budget for exact and decompose");
  run_cmd->add_option("--seed", run_args.seed);
  run_cmd->add_option("--trees", run_args.trees, "packed tree count, 0 for the default")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--emit-decomposition", run_args.emit_decomposition, "write the decomposition dump");
  run_cmd->add_flag("--json", run_args.json);
  run_cmd->add_flag("--timing", run_args.timing, "include wall time (breaks byte-identical output)");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "write a random instance");
  gen_cmd->add_option("--gen", gen_args.gen)->required()->check(CLI::IsMember({"random", "planted"}));
  gen_cmd->add_option("--n", gen_args.n)->required();
  gen_cmd->add_option("--m", gen_args.m)->required();
  gen_cmd->add_option("--k", gen_args.k);
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_option("--cross", gen_args.cross);
  gen_cmd->add_option("--output", gen_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (run_cmd->parsed()) return run(run_args);
    return generate(gen_args);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OracleTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
