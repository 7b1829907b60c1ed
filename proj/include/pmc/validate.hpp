#ifndef PMC_VALIDATE_HPP
#define PMC_VALIDATE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pmc/enumerators.hpp"
#include "pmc/graph_io.hpp"
#include "pmc/oracle.hpp"

namespace pmc {

struct MethodOutcome {
  std::string name;
  std::vector<VertexSet> emitted;  // in emission order
  std::set<VertexSet> distinct;
  bool skipped = false;
  std::string note;

  std::size_t duplicates() const { return emitted.size() - distinct.size(); }
};

struct ValidationOptions {
  Gates gates;
  std::size_t scan_budget = 15;
  std::size_t triangulation_budget = 7;
};

struct ValidationReport {
  std::vector<MethodOutcome> methods;  // bt, nondup, dfs, scan, triangulation
  bool agreement = true;
  std::size_t nondup_duplicates = 0;
  std::size_t dfs_duplicates = 0;
  std::optional<VertexSet> offending;
  std::string offending_method;

  bool ok() const { return agreement && nondup_duplicates == 0 && dfs_duplicates == 0; }
};

/// Runs the three enumerators and both oracles on g and compares them. The
/// scan oracle is the reference; the triangulation oracle is skipped above
/// its budget. Duplicates are counted after the fact from the emitted lists.
inline ValidationReport validate(const Graph& g, const ValidationOptions& options = {}) {
  if (g.order() > options.scan_budget) {
    throw BudgetExceeded("validate: " + std::to_string(g.order()) + " vertices exceeds the oracle budget " +
                         std::to_string(options.scan_budget));
  }
  ValidationReport report;
  auto add = [&](std::string name, std::vector<VertexSet> emitted) {
    MethodOutcome m;
    m.name = std::move(name);
    m.distinct = {emitted.begin(), emitted.end()};
    m.emitted = std::move(emitted);
    report.methods.push_back(std::move(m));
  };
  {
    const auto bt = enumerate_bt(g);
    add("bt", {bt.begin(), bt.end()});
  }
  add("nondup", enumerate_nondup(g, nullptr, options.gates));
  add("dfs", collect(enumerate_dfs(g, nullptr, options.gates)));
  const auto scan = pmc_oracle_scan(g, options.scan_budget);
  add("scan", {scan.begin(), scan.end()});
  if (g.order() <= options.triangulation_budget) {
    const auto tri = pmc_oracle_triangulation(g, {options.triangulation_budget, false});
    add("triangulation", {tri.begin(), tri.end()});
  } else {
    MethodOutcome m;
    m.name = "triangulation";
    m.skipped = true;
    m.note = "skipped: more than " + std::to_string(options.triangulation_budget) + " vertices";
    report.methods.push_back(std::move(m));
  }

  report.nondup_duplicates = report.methods[1].duplicates();
  report.dfs_duplicates = report.methods[2].duplicates();
  for (const auto& m : report.methods) {
    if (m.skipped || m.distinct == scan) continue;
    report.agreement = false;
    if (!report.offending) {
      std::vector<VertexSet> diff;
      std::set_symmetric_difference(m.distinct.begin(), m.distinct.end(), scan.begin(), scan.end(),
                                    std::back_inserter(diff));
      report.offending = diff.front();
      report.offending_method = m.name;
    }
  }
  if (!report.offending) {
    for (std::size_t idx : {std::size_t{1}, std::size_t{2}}) {
      const auto& m = report.methods[idx];
      if (m.duplicates() == 0) continue;
      std::set<VertexSet> seen;
      for (const auto& k : m.emitted) {
        if (!seen.insert(k).second) {
          report.offending = k;
          report.offending_method = m.name + " (repeated)";
          break;
        }
      }
      break;
    }
  }
  return report;
}

inline std::string ordering_labels(const Graph& g) {
  std::string out;
  for (Vertex v : g.ordering()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

/// Human-readable summary; includes a counterexample dump when validation fails.
inline std::string describe(const Graph& g, const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& m : r.methods) {
    os << m.name << ": ";
    if (m.skipped) {
      os << m.note << "\n";
      continue;
    }
    os << m.distinct.size() << " PMCs";
    if (m.duplicates() > 0) os << ", " << m.duplicates() << " duplicates";
    os << "\n";
  }
  os << (r.agreement ? "agreement" : "DISAGREEMENT") << ", duplicates: nondup " << r.nondup_duplicates << ", dfs "
     << r.dfs_duplicates << "\n";
  if (!r.ok()) {
    os << "counterexample:\n";
    os << "graph:\n" << to_edge_list(g);
    os << "ordering: " << ordering_labels(g) << "\n";
    if (r.offending) os << "offending set (" << r.offending_method << "): " << to_label_string(*r.offending) << "\n";
  }
  return os.str();
}

}  // namespace pmc

#endif  // PMC_VALIDATE_HPP
