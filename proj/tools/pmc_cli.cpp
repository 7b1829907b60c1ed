// Command-line front end: enumerate, separators, check, oracle, validate, bench, gen.
//
// Exit codes: 0 success / agreement, 1 usage or parse error, 2 validation
// disagreement or internal inconsistency.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmc/pmc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct GraphInput {
  std::string path;
  std::string format = "auto";
  std::optional<std::size_t> declared_n;
  std::optional<std::uint64_t> seed;
  std::string order_file;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

pmc::GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return pmc::GraphFormat::kEdgeList;
  if (name == "dimacs") return pmc::GraphFormat::kDimacs;
  return pmc::GraphFormat::kAuto;
}

std::vector<pmc::Vertex> read_ordering(const std::string& path, std::size_t n) {
  std::istringstream in(read_all(path));
  std::vector<pmc::Vertex> order;
  long long label = 0;
  while (in >> label) {
    if (label < 1 || static_cast<std::size_t>(label) > n) {
      throw std::invalid_argument("ordering label " + std::to_string(label) + " outside [1," + std::to_string(n) + "]");
    }
    order.push_back(static_cast<pmc::Vertex>(label - 1));
  }
  if (!in.eof()) throw std::invalid_argument("ordering file holds a non-integer token");
  return order;
}

pmc::Graph load(const GraphInput& input) {
  pmc::Graph g = pmc::load_graph(read_all(input.path), parse_format(input.format), input.declared_n);
  if (!input.order_file.empty()) return g.with_ordering(read_ordering(input.order_file, g.order()));
  if (input.seed) return g.with_ordering(pmc::families::random_ordering(g.order(), *input.seed));
  return g;
}

void add_graph_options(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("graph", input.path, "Graph file ('-' for stdin)")->required();
  cmd->add_option("--format", input.format, "edgelist, dimacs or auto")
      ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
  cmd->add_option("--n", input.declared_n, "Vertex count (for isolated trailing vertices)");
  auto* seed = cmd->add_option("--seed", input.seed, "Process vertices in a seeded random order");
  cmd->add_option("--order-file", input.order_file, "Process vertices in the order listed in this file")
      ->excludes(seed);
}

pmc::VertexSet parse_set(const std::string& text, std::size_t n) {
  pmc::VertexSet s(n);
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    std::size_t pos = 0;
    const long long label = std::stoll(token, &pos);
    if (pos != token.size() || label < 1 || static_cast<std::size_t>(label) > n) {
      throw std::invalid_argument("bad vertex '" + token + "' in --set");
    }
    s.insert(static_cast<pmc::Vertex>(label - 1));
  }
  return s;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = std::stoul(text.substr(0, dots));
    const std::size_t hi = std::stoul(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty size range '" + text + "'");
    for (std::size_t s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(std::stoul(token));
  return out;
}

void print_sets(std::vector<pmc::VertexSet> sets, bool sorted) {
  if (sorted) std::sort(sets.begin(), sets.end());
  std::string out;
  for (const auto& s : sets) out += pmc::to_label_string(s) + "\n";
  std::cout << out;
}

std::string graph_id(const std::string& path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

int run_enumerate(const GraphInput& input, const std::string& algo, bool sorted, const std::string& metrics_path) {
  const pmc::Graph g = load(input);
  const pmc::Algorithm algorithm = pmc::parse_algorithm(algo);
  if (algorithm == pmc::Algorithm::kBt) {
    std::cerr << "warning: bt stores every PMC family level by level; its space grows exponentially\n";
  }
  pmc::Metrics metrics;
  pmc::PmcStream stream(g, algorithm, &metrics);
  std::vector<pmc::VertexSet> found;
  while (auto k = stream.next()) {
    if (sorted) found.push_back(*k);
    else std::cout << pmc::to_label_string(*k) << "\n";
  }
  if (sorted) print_sets(found, true);

  pmc::BenchRecord record;
  record.graph = graph_id(input.path);
  record.n = g.order();
  record.m = g.edge_count();
  record.algorithm = algorithm;
  record.pmcs = metrics.pmc_yields;
  record.separators = pmc::count_separators(pmc::full_view(g));
  record.is_pmc_calls = metrics.is_pmc_calls;
  record.peak_sets = metrics.peak_retained_sets;
  record.ms = std::chrono::duration<double, std::milli>(metrics.wall_time).count();
  const std::string text = pmc::bench_csv_header() + "\n" + pmc::to_csv(record) + "\n";
  if (metrics_path.empty()) {
    std::cerr << text;
  } else {
    std::ofstream out(metrics_path);
    if (!out) throw std::runtime_error("cannot write '" + metrics_path + "'");
    out << text;
  }
  return kExitOk;
}

int run_separators(const GraphInput& input, bool sorted) {
  const pmc::Graph g = load(input);
  pmc::SeparatorStream stream(pmc::full_view(g));
  std::vector<pmc::VertexSet> found;
  while (auto s = stream.next()) found.push_back(*s);
  print_sets(found, sorted);
  return kExitOk;
}

int run_check(const GraphInput& input, const std::string& set_text, std::optional<std::size_t> level) {
  const pmc::Graph g = load(input);
  const pmc::GraphView view = level ? pmc::prefix(g, *level) : pmc::full_view(g);
  const pmc::VertexSet k = parse_set(set_text, g.order());
  if (!k.is_subset_of(view.vertices())) throw std::invalid_argument("--set is not contained in the graph");
  std::cout << "is_pmc: " << (!k.empty() && pmc::is_pmc(view, k) ? "true" : "false") << "\n";
  std::cout << "is_minimal_separator: " << (pmc::is_minimal_separator(view, k) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_oracle(const GraphInput& input, const std::string& method) {
  const pmc::Graph g = load(input);
  std::set<pmc::VertexSet> result =
      method == "scan" ? pmc::pmc_oracle_scan(g) : pmc::pmc_oracle_triangulation(g);
  print_sets({result.begin(), result.end()}, true);
  return kExitOk;
}

struct ValidateArgs {
  std::string path;
  std::string format = "auto";
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random_count;
  std::size_t n_min = 6;
  std::size_t n_max = 9;
  std::uint64_t seed = 1;
  std::string disabled_gate;
};

int run_validate(const ValidateArgs& args) {
  pmc::ValidationOptions options;
  if (!args.disabled_gate.empty()) options.gates = pmc::Gates::all_but(args.disabled_gate);

  std::vector<pmc::families::CorpusGraph> corpus;
  if (!args.path.empty()) {
    corpus.push_back({graph_id(args.path), pmc::load_graph(read_all(args.path), parse_format(args.format))});
  }
  if (args.exhaustive) {
    const std::size_t n = *args.exhaustive;
    if (n < 1 || n > 6) throw std::invalid_argument("--exhaustive supports 1 to 6 vertices");
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> codes(std::size_t{1} << pairs);
    for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = c;
    // Fewest edges first, so the first failure reported is a smallest one.
    std::stable_sort(codes.begin(), codes.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    for (auto code : codes) corpus.push_back({"labeled-" + std::to_string(code), pmc::families::from_code(n, code)});
  }
  if (args.random_count) {
    auto rnd = pmc::families::random_corpus(*args.random_count, args.seed, args.n_min, args.n_max);
    std::move(rnd.begin(), rnd.end(), std::back_inserter(corpus));
  }
  if (corpus.empty()) throw std::invalid_argument("validate needs a graph file, --exhaustive or --random");

  std::size_t agreed = 0;
  for (const auto& entry : corpus) {
    pmc::ValidationReport report;
    try {
      report = pmc::validate(entry.graph, options);
    } catch (const pmc::InconsistencyError& e) {
      std::cout << entry.id << ": internal inconsistency: " << e.what() << "\n"
                << "counterexample:\ngraph:\n" << pmc::to_edge_list(entry.graph);
      return kExitDisagreement;
    }
    if (corpus.size() == 1) std::cout << pmc::describe(entry.graph, report);
    if (!report.ok()) {
      if (corpus.size() > 1) std::cout << entry.id << ":\n" << pmc::describe(entry.graph, report);
      std::cout << "validation failed after " << agreed << " agreeing graph(s)\n";
      return kExitDisagreement;
    }
    ++agreed;
  }
  if (corpus.size() > 1) std::cout << "agreement on all " << agreed << " graphs, 0 duplicates\n";
  return kExitOk;
}

struct BenchArgs {
  std::string family = "theta";
  std::string sizes = "2..8";
  std::vector<std::string> algos{"bt", "dfs"};
  double p = 0.4;
  std::uint64_t seed = 7;
  std::optional<std::size_t> cutoff;
  bool no_timing = false;
  std::string output;
};

int run_bench(const BenchArgs& args) {
  pmc::SweepSpec spec;
  spec.family = args.family;
  spec.sizes = parse_sizes(args.sizes);
  spec.algorithms.clear();
  for (const auto& a : args.algos) spec.algorithms.push_back(pmc::parse_algorithm(a));
  spec.p = args.p;
  spec.seed = args.seed;
  spec.stored_space_cutoff = args.cutoff;

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) throw std::runtime_error("cannot write '" + args.output + "'");
  }
  std::ostream& out = args.output.empty() ? std::cout : file;
  out << pmc::bench_csv_header() << "\n";
  for (const auto& row : pmc::run_sweep(spec)) out << pmc::to_csv(row, !args.no_timing) << "\n";
  return kExitOk;
}

int run_gen(const std::string& family, std::size_t size, double p, std::uint64_t seed, const std::string& format,
            const std::string& output) {
  const pmc::Graph g = pmc::families::make(family, {size, p, seed});
  const std::string text = format == "dimacs" ? pmc::to_dimacs(g) : pmc::to_edge_list(g);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write '" + output + "'");
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potential maximal clique enumeration"};
  app.require_subcommand(1);

  GraphInput enum_input;
  std::string algo = "dfs";
  bool enum_sorted = false;
  std::string metrics_path;
  auto* enumerate = app.add_subcommand("enumerate", "List every potential maximal clique, one per line");
  add_graph_options(enumerate, enum_input);
  enumerate->add_option("--algo", algo, "bt, nondup or dfs")->check(CLI::IsMember({"bt", "nondup", "dfs"}));
  enumerate->add_flag("--sorted", enum_sorted, "Sort the output lines");
  enumerate->add_option("--metrics", metrics_path, "Write the metrics record here instead of stderr");

  GraphInput sep_input;
  bool sep_sorted = false;
  auto* seps = app.add_subcommand("separators", "List every minimal separator, one per line");
  add_graph_options(seps, sep_input);
  seps->add_flag("--sorted", sep_sorted, "Sort the output lines");

  GraphInput check_input;
  std::string set_text;
  std::optional<std::size_t> level;
  auto* check = app.add_subcommand("check", "Test one vertex set");
  add_graph_options(check, check_input);
  check->add_option("--set", set_text, "Comma-separated vertex labels, e.g. 1,2,3")->required();
  check->add_option("--level", level, "Test against the prefix graph G_i instead of G");

  GraphInput oracle_input;
  std::string method = "scan";
  auto* oracle = app.add_subcommand("oracle", "Brute-force PMC listing for small graphs");
  add_graph_options(oracle, oracle_input);
  oracle->add_option("--method", method, "scan or triangulation")->check(CLI::IsMember({"scan", "triangulation"}));

  ValidateArgs vargs;
  auto* validate = app.add_subcommand("validate", "Cross-check the three algorithms against both oracles");
  validate->add_option("graph", vargs.path, "Graph file");
  validate->add_option("--format", vargs.format, "edgelist, dimacs or auto");
  validate->add_option("--exhaustive", vargs.exhaustive, "Check every labeled graph on this many vertices");
  validate->add_option("--random", vargs.random_count, "Check this many seeded random graphs");
  validate->add_option("--n-min", vargs.n_min, "Smallest random graph");
  validate->add_option("--n-max", vargs.n_max, "Largest random graph");
  validate->add_option("--seed", vargs.seed, "Seed of the random corpus");
  validate->add_option("--disable-gate", vargs.disabled_gate, "Switch off one duplicate-avoidance check (i..v)")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v"}));

  BenchArgs bargs;
  auto* bench = app.add_subcommand("bench", "Run algorithms over a graph family and print CSV");
  bench->add_option("--family", bargs.family, "theta, path, cycle, complete or random")
      ->check(CLI::IsMember({"theta", "path", "cycle", "complete", "random"}));
  bench->add_option("--sizes", bargs.sizes, "Sizes as lo..hi or a comma list (k for theta, n otherwise)");
  bench->add_option("--algos", bargs.algos, "Algorithms to run")->delimiter(',');
  bench->add_option("--p", bargs.p, "Edge probability for random graphs");
  bench->add_option("--seed", bargs.seed, "Seed for random graphs");
  bench->add_option("--stored-cutoff", bargs.cutoff, "Skip bt and nondup above this many vertices");
  bench->add_flag("--no-timing", bargs.no_timing, "Write 0 in the ms column");
  bench->add_option("--output", bargs.output, "CSV file (default stdout)");

  std::string family;
  std::size_t size = 0;
  double gen_p = 0.4;
  std::uint64_t gen_seed = 7;
  std::string gen_format = "edgelist";
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Write a graph from a family");
  gen->add_option("--family", family, "theta, path, cycle, complete or random")
      ->required()
      ->check(CLI::IsMember({"theta", "path", "cycle", "complete", "random"}));
  gen->add_option("--size", size, "k for theta, n otherwise")->required();
  gen->add_option("--p", gen_p, "Edge probability for random graphs");
  gen->add_option("--seed", gen_seed, "Seed for random graphs");
  gen->add_option("--format", gen_format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen->add_option("--output", gen_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(enum_input, algo, enum_sorted, metrics_path);
    if (seps->parsed()) return run_separators(sep_input, sep_sorted);
    if (check->parsed()) return run_check(check_input, set_text, level);
    if (oracle->parsed()) return run_oracle(oracle_input, method);
    if (validate->parsed()) return run_validate(vargs);
    if (bench->parsed()) return run_bench(bargs);
    if (gen->parsed()) return run_gen(family, size, gen_p, gen_seed, gen_format, gen_output);
  } catch (const pmc::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
