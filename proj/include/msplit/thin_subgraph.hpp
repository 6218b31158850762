#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "msplit/containment_graph.hpp"

namespace msplit {

// A spanning subgraph of Γ(𝔖) whose restriction to every split pair is a D1
// pattern. Critical arcs and consistency are derived on construction.
class ThinSubgraph {
 public:
  // `chosen_out[v]` is the out-neighbourhood of v. Throws ContractError if an
  // arc is missing from `graph` or some pair does not restrict to D1.
  ThinSubgraph(ContainmentGraph graph, std::vector<VertexMask> chosen_out);

  const ContainmentGraph& graph() const { return graph_; }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
  VertexMask out_mask(int v) const { return out_[v]; }
  std::vector<Arc> arcs() const;

  bool is_critical(int u, int v) const { return (crit_out_[u] >> v) & 1; }
  VertexMask critical_out(int v) const { return crit_out_[v]; }
  VertexMask critical_in(int v) const { return crit_in_[v]; }
  std::vector<Arc> critical_arcs() const;

  bool consistent() const { return consistent_; }

  friend bool operator==(const ThinSubgraph& a, const ThinSubgraph& b) {
    return a.out_ == b.out_;
  }

 private:
  ContainmentGraph graph_;
  std::vector<VertexMask> out_;
  std::vector<VertexMask> crit_out_;
  std::vector<VertexMask> crit_in_;
  bool consistent_ = false;
};

std::vector<Arc> critical_arcs(const ThinSubgraph& t);
bool is_consistent(const ThinSubgraph& t);

namespace kernel {

// Critical out-masks of the subgraph given by `out`, restricted to `active`.
std::vector<VertexMask> critical_out_masks(const ContainmentGraph& g,
                                           const std::vector<VertexMask>& out,
                                           VertexMask active);

// For every active vertex, the sum of its critical in-neighbours' parts fits
// inside its own part.
bool critical_unions_fit(const ContainmentGraph& g,
                         const std::vector<VertexMask>& crit_out,
                         VertexMask active);

}  // namespace kernel

struct SearchLimits {
  // Upper bound on search-tree nodes (partial selections checked).
  std::uint64_t max_nodes = std::uint64_t{1} << 26;
};

enum class SearchOutcome {
  kExhausted,  // every selection was visited
  kStopped,    // the visitor asked to stop
  kTruncated,  // the node budget ran out
};

// Return false to stop the enumeration.
using ThinVisitor = std::function<bool(const ThinSubgraph&)>;

// Per-pair structure of Γ(𝔖) that drives thin-subgraph enumeration: D1 pairs
// are forced, D2 pairs branch two ways, a NoEdges pair admits nothing.
struct ThinLayout {
  struct Branch {
    std::size_t i = 0;
    std::size_t j = 0;
    // options[k] = {arc from split i to split j, its complement partner}.
    Arc options[2][2];
  };

  bool blocked = false;
  std::size_t blocked_i = 0;
  std::size_t blocked_j = 0;
  std::vector<VertexMask> forced_out;
  // D2 pairs in branch order: by j, then by i.
  std::vector<Branch> branches;
};

ThinLayout thin_layout(const ContainmentGraph& g);

// Number of thin subgraphs: 0 if some pair is NoEdges, else 2^(#D2 pairs),
// saturating at UINT64_MAX.
std::uint64_t thin_subgraph_count(const ContainmentGraph& g);

// All thin subgraphs, in lexicographic order of the D2 choice vector.
SearchOutcome for_each_thin_subgraph(const ContainmentGraph& g,
                                     const ThinVisitor& visit,
                                     const SearchLimits& limits = {});

// Consistent thin subgraphs only, same order. Splits are added one at a time
// and a partial selection is abandoned as soon as the subsystem on the splits
// placed so far is inconsistent.
SearchOutcome for_each_consistent_thin_subgraph(const ContainmentGraph& g,
                                                const ThinVisitor& visit,
                                                const SearchLimits& limits = {});

namespace reference {

// Brute force: materialise every thin subgraph and keep the consistent ones.
// Kept for cross-checking the pruned search.
std::vector<ThinSubgraph> consistent_thin_subgraphs(const ContainmentGraph& g);

}  // namespace reference

}  // namespace msplit
