// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run everything
//   acceptance 3 9-ii     run only the named criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pmc/pmc.hpp"

using namespace pmc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<families::CorpusGraph>& corpus() {
  static const auto graphs = families::random_corpus(200, 1, 6, 9);
  return graphs;
}

std::set<VertexSet> distinct(const std::vector<VertexSet>& v) { return {v.begin(), v.end()}; }

std::set<VertexSet> from_labels(std::size_t n, std::vector<std::vector<Vertex>> sets) {
  std::set<VertexSet> out;
  for (const auto& ids : sets) {
    VertexSet s(n);
    for (Vertex v : ids) s.insert(v - 1);
    out.insert(s);
  }
  return out;
}

std::size_t repeats(const std::vector<VertexSet>& emitted) { return emitted.size() - distinct(emitted).size(); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome c4_reproduction() {
  const auto start = Clock::now();
  const Graph g = load_graph("1 2\n2 3\n3 4\n4 1");
  const auto pmcs = from_labels(4, {{1, 2, 3}, {1, 3, 4}, {1, 2, 4}, {2, 3, 4}});
  const auto seps = from_labels(4, {{1, 3}, {2, 4}});
  if (enumerate_bt(g) != pmcs) return fail("bt differs");
  const auto nondup = enumerate_nondup(g);
  if (nondup.size() != 4 || distinct(nondup) != pmcs) return fail("nondup differs");
  const auto dfs = collect(enumerate_dfs(g));
  if (dfs.size() != 4 || distinct(dfs) != pmcs) return fail("dfs differs");
  if (pmc_oracle_scan(g) != pmcs) return fail("scan oracle differs");
  if (pmc_oracle_triangulation(g) != pmcs) return fail("triangulation oracle differs");
  std::vector<VertexSet> streamed;
  auto stream = separators(full_view(g));
  while (auto s = stream.next()) streamed.push_back(*s);
  if (streamed.size() != 2 || distinct(streamed) != seps) return fail("separator stream differs");
  if (separators_oracle(full_view(g)) != seps) return fail("separator oracle differs");
  const double t = seconds_since(start);
  if (t >= 1.0) return fail("took " + std::to_string(t) + " s, limit 1 s");
  return {true, "4 PMCs and 2 separators from every method"};
}

Outcome exhaustive_five() {
  const auto start = Clock::now();
  for (std::uint64_t code = 0; code < 1024; ++code) {
    const Graph g = families::from_code(5, code);
    const auto scan = pmc_oracle_scan(g);
    const auto nondup = enumerate_nondup(g);
    const auto dfs = collect(enumerate_dfs(g));
    if (enumerate_bt(g) != scan || distinct(nondup) != scan || nondup.size() != scan.size() ||
        distinct(dfs) != scan || dfs.size() != scan.size() || pmc_oracle_triangulation(g) != scan) {
      return fail("disagreement on graph code " + std::to_string(code));
    }
  }
  const double t = seconds_since(start);
  if (t >= 120.0) return fail("took " + std::to_string(t) + " s, limit 120 s");
  return {true, "1024 graphs, five methods agree"};
}

Outcome duplicate_free(const Gates& gates, std::string* first_offender = nullptr) {
  const auto start = Clock::now();
  std::size_t nondup_repeats = 0, dfs_repeats = 0, offending_graphs = 0;
  for (const auto& [id, g] : corpus()) {
    const std::size_t a = repeats(enumerate_nondup(g, nullptr, gates));
    const std::size_t b = repeats(collect(enumerate_dfs(g, nullptr, gates)));
    nondup_repeats += a;
    dfs_repeats += b;
    if (a + b > 0 && offending_graphs++ == 0 && first_offender) *first_offender = id;
  }
  const double t = seconds_since(start);
  Outcome o;
  o.pass = nondup_repeats == 0 && dfs_repeats == 0 && t < 300.0;
  o.detail = "repeats: nondup " + std::to_string(nondup_repeats) + ", dfs " + std::to_string(dfs_repeats) + " over " +
             std::to_string(offending_graphs) + " graphs";
  if (t >= 300.0) o.detail += "; took " + std::to_string(t) + " s, limit 300 s";
  return o;
}

Outcome unique_extension() {
  std::size_t checked = 0;
  for (const auto& [id, g] : corpus()) {
    std::set<VertexSet> previous = pmc_oracle_scan(prefix(g, 1));
    for (std::size_t i = 2; i <= g.order(); ++i) {
      const GraphView cur = prefix(g, i);
      const Vertex v = g.vertex_at(i);
      const auto current = pmc_oracle_scan(cur);
      for (const auto& k : previous) {
        if ((current.count(k) == 1) == (current.count(k.with(v)) == 1))
          return fail(id + ": level " + std::to_string(i) + ", K = {" + to_label_string(k) + "}");
        try {
          extend_pmc(cur, k, v);
        } catch (const InconsistencyError& e) {
          return fail(id + ": " + e.what());
        }
        ++checked;
      }
      previous = current;
    }
  }
  return {true, std::to_string(checked) + " (graph, level, K) cases"};
}

Outcome persistence() {
  std::size_t yields = 0;
  for (const auto& [id, g] : corpus()) {
    auto stream = enumerate_dfs(g);
    while (stream.next()) {
      const Origin& o = stream.last_origin();
      ++yields;
      if (o.level == 1) continue;
      const GraphView prev = prefix(g, o.level - 1);
      if (o.generated.is_subset_of(prev.vertices()) && is_pmc(prev, o.generated))
        return fail(id + ": generated {" + to_label_string(o.generated) + "} is a PMC of the previous level");
    }
  }
  std::mt19937_64 rng(2024);
  std::size_t triples = 0, attempts = 0;
  while (triples < 50) {
    if (++attempts > 100000) return fail("could not draw 50 triples");
    const auto& [id, g] = corpus()[rng() % corpus().size()];
    const std::size_t i = 1 + rng() % (g.order() - 1);
    const auto here = pmc_oracle_scan(prefix(g, i));
    const auto next = pmc_oracle_scan(prefix(g, i + 1));
    std::vector<VertexSet> dropped;
    for (const auto& k : here)
      if (!next.count(k)) dropped.push_back(k);
    if (dropped.empty()) continue;
    const VertexSet& k = dropped[rng() % dropped.size()];
    for (std::size_t j = i + 1; j <= g.order(); ++j) {
      if (is_pmc(prefix(g, j), k))
        return fail(id + ": {" + to_label_string(k) + "} returns at level " + std::to_string(j));
    }
    ++triples;
  }
  return {true, std::to_string(yields) + " generated sets, 50 dropped-PMC triples"};
}

Outcome polynomial_space() {
  const auto start = Clock::now();
  std::string detail;
  double last = 0.0;
  for (std::size_t k = 2; k <= 10; ++k) {
    const Graph g = families::theta(k);
    const std::size_t n = g.order();
    Metrics dfs_metrics, bt_metrics;
    const auto level_start = Clock::now();
    std::size_t pmcs = 0;
    auto stream = enumerate_dfs(g, &dfs_metrics);
    while (stream.next()) ++pmcs;
    last = seconds_since(level_start);
    const auto bt = enumerate_bt(g, &bt_metrics);
    if (bt.size() != pmcs) return fail("theta-" + std::to_string(k) + ": dfs and bt counts differ");
    if (dfs_metrics.peak_retained_sets > 8 * n * n * n)
      return fail("theta-" + std::to_string(k) + ": dfs peak " + std::to_string(dfs_metrics.peak_retained_sets));
    if (pmcs * n < (std::size_t{1} << k))
      return fail("theta-" + std::to_string(k) + ": only " + std::to_string(pmcs) + " PMCs");
    if (bt_metrics.peak_retained_sets < pmcs)
      return fail("theta-" + std::to_string(k) + ": bt peak below PMC count");
    detail = "k=10: " + std::to_string(pmcs) + " PMCs, dfs peak " + std::to_string(dfs_metrics.peak_retained_sets) +
             " <= " + std::to_string(8 * n * n * n) + ", bt peak " + std::to_string(bt_metrics.peak_retained_sets);
  }
  if (last >= 600.0) return fail("dfs at k=10 took " + std::to_string(last) + " s, limit 600 s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "; dfs at k=10 took %.1f s, total %.1f s", last, seconds_since(start));
  return {true, detail + buf};
}

Outcome ordering_independence() {
  for (std::size_t idx = 0; idx < 20; ++idx) {
    const auto& [id, g] = corpus()[idx * 10];
    std::set<VertexSet> reference;
    for (std::uint64_t o = 0; o < 5; ++o) {
      const Graph h = g.with_ordering(families::random_ordering(g.order(), 1000 * idx + o));
      const auto dfs = distinct(collect(enumerate_dfs(h)));
      if (o == 0) reference = dfs;
      if (dfs != reference || enumerate_bt(h) != reference || distinct(enumerate_nondup(h)) != reference)
        return fail(id + ": ordering " + std::to_string(o) + " changes the output");
    }
  }
  return {true, "20 graphs x 5 orderings"};
}

Outcome sanity_inequality() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t k = 2; k <= 10; ++k) graphs.emplace_back("theta-" + std::to_string(k), families::theta(k));
  for (std::size_t n = 3; n <= 10; ++n) {
    graphs.emplace_back("cycle-" + std::to_string(n), families::cycle(n));
    graphs.emplace_back("path-" + std::to_string(n), families::path(n));
    graphs.emplace_back("complete-" + std::to_string(n), families::complete(n));
  }
  for (const auto& c : corpus()) graphs.emplace_back(c.id, c.graph);
  for (const auto& [id, g] : graphs) {
    const std::size_t seps = count_separators(full_view(g));
    const std::size_t pmcs = enumerate_bt(g).size();
    if (pmcs * g.order() < seps)
      return fail(id + ": " + std::to_string(pmcs) + " PMCs vs " + std::to_string(seps) + " separators");
  }
  return {true, std::to_string(graphs.size()) + " graphs"};
}

Outcome gates_needed_together() {
  Gates gates;
  gates.not_only_new_vertex = false;
  gates.reduced_candidate_fresh = false;
  std::string offender;
  const Outcome run = duplicate_free(gates, &offender);
  if (run.pass) return fail("no repeats with gates (iv) and (v) off; " + run.detail);
  return {true, run.detail + ", first " + offender};
}

Outcome gate_needed(const char* roman) {
  std::string offender;
  const Outcome run = duplicate_free(Gates::all_but(roman), &offender);
  if (run.pass) return fail("no repeats with gate (" + std::string(roman) + ") off; " + run.detail);
  return {true, run.detail + ", first " + offender};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria{
      {"1", {"C4 reproduction, every method, under 1 s", c4_reproduction}},
      {"2", {"all 1024 graphs on 5 vertices, five methods agree, under 2 min", exhaustive_five}},
      {"3", {"nondup and dfs emit no repeats on 200 random graphs, under 5 min", [] { return duplicate_free({}); }}},
      {"4", {"unique extension across prefix levels", unique_extension}},
      {"5", {"generated sets are new, dropped PMCs never return", persistence}},
      {"6", {"theta k=2..10: dfs peak <= 8n^3, PMCs >= 2^k/n, bt peak >= PMCs", polynomial_space}},
      {"7", {"ordering independence, 20 graphs x 5 orderings", ordering_independence}},
      {"8", {"PMC count >= separator count / n", sanity_inequality}},
      {"9-i", {"gate (i) off causes repeats", [] { return gate_needed("i"); }}},
      {"9-ii", {"gate (ii) off causes repeats", [] { return gate_needed("ii"); }}},
      {"9-iii", {"gate (iii) off causes repeats", [] { return gate_needed("iii"); }}},
      {"9-iv", {"gate (iv) off causes repeats", [] { return gate_needed("iv"); }}},
      {"9-v", {"gate (v) off causes repeats", [] { return gate_needed("v"); }}},
      {"9-iv+v", {"gates (iv) and (v) off together cause repeats", gates_needed_together}},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.first == name;
    if (!known) {
      std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
      return 2;
    }
  }
  int failures = 0;
  for (const auto& [name, entry] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s %-6s %s [%s] (%.2f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), entry.first.c_str(),
                o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
