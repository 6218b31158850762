#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "msplit/compat_engine.hpp"
#include "msplit/oracle.hpp"
#include "msplit/scan.hpp"
#include "msplit/structure.hpp"

namespace msplit {

struct Budgets {
  SearchLimits search;
  CensusLimits census;
  LatticeLimits lattice;
  OracleBudget oracle;
};

// Comma-separated key=value pairs: nodes, subgraphs, lattice, oracle-splits,
// oracle-ground. Throws InputError on an unknown key or bad number.
Budgets parse_budgets(std::string_view spec);
// Defaults overridden by the MSPLIT_BUDGET environment variable, if set.
Budgets budgets_from_env();

std::string dot_graph(const ContainmentGraph& g);
// Every arc of the graph; arcs of t solid, critical ones bold, the rest dashed.
std::string dot_thin_subgraph(const ThinSubgraph& t);
std::string dot_tree(const MTree& t, std::string_view name = "mtree");

namespace report {

// `minimal` is a minimal incompatible subset (0-based) when incompatible.
std::string check_text(const CompatibilityResult& r, const std::vector<std::size_t>& minimal);
std::string check_json(const CompatibilityResult& r, const std::vector<std::size_t>& minimal);

std::string census_text(const RepresentationCensus& c);
std::string census_json(const RepresentationCensus& c);

std::string analyze_text(const SplitSystem& system, const SystemAnalysis& a);
std::string analyze_json(const SplitSystem& system, const SystemAnalysis& a);

std::string oracle_text(const OracleResult& r);
std::string oracle_json(const OracleResult& r);

std::string scan_text(const ScanReport& r);
std::string scan_json(const ScanReport& r);

}  // namespace report

}  // namespace msplit
