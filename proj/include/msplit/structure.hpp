#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msplit/compat_engine.hpp"
#include "msplit/containment_graph.hpp"

namespace msplit {

// Terminal and superterminal parts of a system, as vertices of its
// containment graph.
struct TerminalReport {
  // Indegree 0.
  std::vector<int> terminal;
  // Terminal with outdegree n-1.
  std::vector<int> superterminal;
  // Terminal and strictly inside exactly one part of every other split. This
  // is what makes S(A) well defined; it implies the degree condition but not
  // conversely when a part sits inside both parts of some split.
  std::vector<int> per_split_superterminal;
  // For per_split_superterminal[t], containing_side[t][j] is the vertex of
  // split j whose part contains it (the vertex itself for its own split).
  std::vector<std::vector<int>> containing_side;
};

TerminalReport terminal_report(const ContainmentGraph& g);
// The report of the subsystem made of the splits in `split_mask`; vertex ids
// stay those of g.
TerminalReport terminal_report(const ContainmentGraph& g, std::uint32_t split_mask);
TerminalReport terminal_report(const SplitSystem& system);

// One verified statement. `applicable` counts the instances where its
// hypothesis held; each violation is a human-readable witness.
struct CheckRecord {
  explicit CheckRecord(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t applicable = 0;
  std::vector<std::string> violations;
  std::string notice;
  bool holds() const { return violations.empty(); }
};

CheckRecord check_supcore(const SplitSystem& system);

struct LatticeLimits {
  std::size_t max_splits = 20;
  SearchLimits search;
};

// Compatibility of every subsystem, by index mask.
class SubsetLattice {
 public:
  SubsetLattice(const SplitSystem& system, const LatticeLimits& limits = {});

  std::size_t split_count() const { return n_; }
  bool compatible(std::uint32_t mask) const;
  // Inclusion-minimal incompatible masks, ascending.
  const std::vector<std::uint32_t>& minimal_incompatible() const { return minimal_; }
  bool truncated() const { return truncated_; }
  std::size_t engine_calls() const { return engine_calls_; }

 private:
  std::size_t n_ = 0;
  bool truncated_ = false;
  std::size_t engine_calls_ = 0;
  std::vector<std::uint8_t> compat_;
  std::vector<std::uint32_t> minimal_;
};

std::vector<std::size_t> mask_indices(std::uint32_t mask);

struct MinimalSubsets {
  std::vector<std::vector<std::size_t>> subsets;
  bool truncated = false;
};
MinimalSubsets minimal_incompatible_subsets(const SplitSystem& system,
                                            const LatticeLimits& limits = {});

struct BoundReport {
  std::size_t delta = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> minimal_incompatible_subsets;
  bool star_holds = true;   // every minimal incompatible subset has size <= delta+2
  bool star3_holds = true;  // <= delta+3
  bool ref43_holds = true;  // <= max(2 delta, delta+2)
  bool truncated = false;
};
BoundReport bound_report(const SplitSystem& system, const LatticeLimits& limits = {});
BoundReport bound_report(const SplitSystem& system, const SubsetLattice& lattice);

struct TheoremReport {
  std::vector<CheckRecord> checks;
  // (k, delta) of every minimal incompatible subset with k >= 3 and no
  // superterminal part.
  std::vector<std::pair<std::size_t, std::size_t>> open_question;
  // Parts that meet the degree condition but not the per-split one.
  std::size_t superterminal_mismatches = 0;
  bool truncated = false;
  bool any_violation() const;
  const CheckRecord* find(const std::string& name) const;
};
TheoremReport check_special_theorems(const SplitSystem& system,
                                     const LatticeLimits& limits = {});
TheoremReport check_special_theorems(const SplitSystem& system, const SubsetLattice& lattice,
                                     const CompatibilityResult& compat);

struct IntersectionBound {
  std::size_t parts = 0;
  std::size_t components = 0;
  std::size_t delta = 0;
  bool holds = false;
};
// Throws InputError for fewer than two parts, an empty part, an edge out of
// range or a loop, or an edge between parts with no common element.
IntersectionBound intersection_graph_bound(
    const std::vector<Multiset>& parts,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Greedy shrink to one inclusion-minimal incompatible subset; empty if the
// system is compatible.
std::vector<std::size_t> find_minimal_incompatible_subset(const SplitSystem& system,
                                                          const SearchLimits& limits = {});

struct SystemAnalysis {
  std::size_t n = 0;
  std::size_t delta = 0;
  bool thin = false;
  CompatibilityResult compat;
  TerminalReport terminal;
  CheckRecord supcore;
  BoundReport bounds;
  TheoremReport theorems;
};
SystemAnalysis analyze_system(const SplitSystem& system, const LatticeLimits& limits = {});

namespace verify {

// Kahn's algorithm over the arcs, independent of the size order.
bool acyclic(const ContainmentGraph& g);
// u -> v iff mate(v) -> mate(u).
bool complement_symmetric(const ContainmentGraph& g);
// Arcs between different splits are exactly the pairs joined by a path of
// critical arcs.
bool arcs_determined_by_critical(const ThinSubgraph& t);
// Critical arcs u -> w and x -> w from different splits force u -> mate(x)
// to be critical.
bool critical_transitive(const ThinSubgraph& t);
// Every terminal part labels some leaf of the tree.
bool terminal_leaves(const ContainmentGraph& g, const MTree& tree);

}  // namespace verify

}  // namespace msplit
