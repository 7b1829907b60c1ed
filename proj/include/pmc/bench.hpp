#ifndef PMC_BENCH_HPP
#define PMC_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "pmc/enumerators.hpp"
#include "pmc/families.hpp"

namespace pmc {

struct BenchRecord {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algorithm = Algorithm::kDfs;
  bool skipped = false;
  std::size_t pmcs = 0;
  std::size_t separators = 0;
  std::uint64_t is_pmc_calls = 0;
  std::size_t peak_sets = 0;
  double ms = 0.0;
};

inline std::string bench_csv_header() { return "graph,n,m,algo,pmcs,seps,ispmc_calls,peak_sets,ms"; }

/// One CSV row. With `timing` off the ms column is written as 0 so that
/// repeated runs are byte-identical.
inline std::string to_csv(const BenchRecord& r, bool timing = true) {
  std::string row = r.graph + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                    std::string(to_string(r.algorithm)) + ",";
  if (r.skipped) return row + "skipped,,,,";
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", timing ? r.ms : 0.0);
  return row + std::to_string(r.pmcs) + "," + std::to_string(r.separators) + "," + std::to_string(r.is_pmc_calls) +
         "," + std::to_string(r.peak_sets) + "," + ms;
}

/// Runs one algorithm to completion and records its counters.
inline BenchRecord run_bench(const Graph& g, const std::string& id, Algorithm algorithm,
                             std::optional<std::size_t> separator_count = std::nullopt) {
  BenchRecord r;
  r.graph = id;
  r.n = g.order();
  r.m = g.edge_count();
  r.algorithm = algorithm;
  r.separators = separator_count ? *separator_count : count_separators(full_view(g));
  Metrics metrics;
  const auto start = std::chrono::steady_clock::now();
  PmcStream stream(g, algorithm, &metrics);
  while (stream.next()) ++r.pmcs;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.is_pmc_calls = metrics.is_pmc_calls;
  r.peak_sets = metrics.peak_retained_sets;
  return r;
}

struct SweepSpec {
  std::string family = "theta";
  std::vector<std::size_t> sizes;
  std::vector<Algorithm> algorithms{Algorithm::kBt, Algorithm::kDfs};
  double p = 0.4;
  std::uint64_t seed = 7;
  /// Exponential-space algorithms (bt, nondup) are skipped above this many vertices.
  std::optional<std::size_t> stored_space_cutoff;
};

inline std::vector<BenchRecord> run_sweep(const SweepSpec& spec) {
  std::vector<BenchRecord> rows;
  for (std::size_t size : spec.sizes) {
    const families::FamilyParams params{size, spec.p, spec.seed};
    const Graph g = families::make(spec.family, params);
    const std::string id = families::id(spec.family, params);
    const std::size_t seps = count_separators(full_view(g));
    for (Algorithm a : spec.algorithms) {
      if (a != Algorithm::kDfs && spec.stored_space_cutoff && g.order() > *spec.stored_space_cutoff) {
        BenchRecord skipped;
        skipped.graph = id;
        skipped.n = g.order();
        skipped.m = g.edge_count();
        skipped.algorithm = a;
        skipped.skipped = true;
        rows.push_back(skipped);
        continue;
      }
      rows.push_back(run_bench(g, id, a, seps));
    }
  }
  return rows;
}

}  // namespace pmc

#endif  // PMC_BENCH_HPP
