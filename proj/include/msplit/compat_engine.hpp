#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msplit/containment_graph.hpp"
#include "msplit/mtree.hpp"
#include "msplit/thin_subgraph.hpp"

namespace msplit {

struct CompatibilityResult {
  bool compatible = false;
  std::optional<ThinSubgraph> witness;
  std::optional<MTree> representation;
  // The search budget ran out before a decision was reached.
  bool truncated = false;
};

// The tree whose vertices are the classes of u ~ v (u == v, or the arc from
// the complement of u to v is critical), with label(v) = part(v) minus the
// sum of its critical in-neighbours. Throws ContractError if `t` is not
// consistent or the result fails to represent the system.
MTree build_tree(const ThinSubgraph& t);

// First consistent thin subgraph in branch order, and its tree.
CompatibilityResult check_compatibility(const SplitSystem& system,
                                        const SearchLimits& limits = {});

// Canonical text for a thin subgraph under digraph isomorphisms that map each
// vertex to one with an equal part.
std::string subgraph_descriptor(const ThinSubgraph& t);

// The thin subgraph induced by a representation: (A,S_i) -> (B,S_j) iff the
// component of T - e(S_i) labelled A lies inside the component of T - e(S_j)
// labelled B. Throws InputError if `tree` does not represent g.system().
ThinSubgraph thin_subgraph_from_tree(const ContainmentGraph& g, const MTree& tree);

struct CensusLimits {
  SearchLimits search;
  std::size_t max_subgraphs = 100000;
};

struct RepresentationCensus {
  struct IsoClass {
    std::string subgraph_descriptor;
    std::string tree_form;
    MTree tree;
    std::size_t members = 0;
  };

  std::size_t thin_subgraph_count = 0;  // consistent thin subgraphs found
  std::vector<IsoClass> iso_classes;
  bool unique = false;
  bool truncated = false;
  // Non-empty if subgraph classes and tree isomorphism classes disagree.
  std::vector<std::string> bijection_violations;
};

RepresentationCensus census_representations(const SplitSystem& system,
                                            const CensusLimits& limits = {});

}  // namespace msplit
