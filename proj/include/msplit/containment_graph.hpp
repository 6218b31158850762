#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "msplit/counts.hpp"
#include "msplit/split.hpp"

namespace msplit {

// Vertex sets are 64-bit masks, so a graph holds at most 32 splits.
inline constexpr std::size_t kMaxSplits = 32;
using VertexMask = std::uint64_t;

struct Arc {
  int from;
  int to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class PairClass { kNoEdges, kD1, kD2 };
std::string_view to_string(PairClass c);

// The split-containment digraph of a split system.
//
// Vertex 2i is the small part of split i, vertex 2i+1 its large part. There is
// an arc u -> v iff u and v belong to different splits and part(u) ⊊ part(v).
// Immutable; copies share storage.
class ContainmentGraph {
 public:
  ContainmentGraph();
  explicit ContainmentGraph(SplitSystem system);

  const SplitSystem& system() const;
  std::size_t split_count() const;
  std::size_t vertex_count() const { return 2 * split_count(); }

  static int vertex_of(std::size_t split, Side side) {
    return static_cast<int>(2 * split + static_cast<std::size_t>(side));
  }
  static std::size_t split_of(int v) { return static_cast<std::size_t>(v) >> 1; }
  static Side side_of(int v) { return (v & 1) ? Side::kLarge : Side::kSmall; }
  static int mate(int v) { return v ^ 1; }
  static VertexMask bit(int v) { return VertexMask{1} << v; }

  const Multiset& part(int v) const;
  const Counts& counts(int v) const;
  std::size_t part_size(int v) const;

  bool has_arc(int u, int v) const { return (out_mask(u) >> v) & 1; }
  VertexMask out_mask(int v) const;
  VertexMask in_mask(int v) const;
  std::size_t arc_count() const;
  std::vector<Arc> arcs() const;

  // Arcs whose source lies in split i and target in split j, sorted.
  std::vector<Arc> arcs_between(std::size_t i, std::size_t j) const;
  PairClass classify_pair(std::size_t i, std::size_t j) const;

  // Vertices in ascending part size; every arc points forward in this order.
  const std::vector<int>& topological_order() const;

  // Both vertices of every split whose bit is set in `split_mask`.
  static VertexMask vertices_of_splits(std::uint32_t split_mask);

  // "{a,b} / S1" with a 1-based split index.
  std::string vertex_label(int v) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

ContainmentGraph build_scg(const SplitSystem& system);

// Every split pair classifies as D1.
bool is_thin(const ContainmentGraph& g);
bool is_thin(const SplitSystem& system);

}  // namespace msplit
