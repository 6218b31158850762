#include "msplit/containment_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "msplit/errors.hpp"

namespace msplit {

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::kNoEdges:
      return "NoEdges";
    case PairClass::kD1:
      return "D1";
    case PairClass::kD2:
      return "D2";
  }
  return "?";
}

struct ContainmentGraph::Data {
  SplitSystem system;
  std::vector<Counts> counts;
  std::vector<std::size_t> sizes;
  std::vector<VertexMask> out;
  std::vector<VertexMask> in;
  std::vector<int> topo;
};

ContainmentGraph::ContainmentGraph() : ContainmentGraph(SplitSystem{}) {}

ContainmentGraph::ContainmentGraph(SplitSystem system) {
  if (system.size() > kMaxSplits) {
    throw InputError("split-containment graph supports at most " +
                     std::to_string(kMaxSplits) + " splits, got " +
                     std::to_string(system.size()));
  }
  auto d = std::make_shared<Data>();
  const std::size_t nv = 2 * system.size();
  d->counts.reserve(nv);
  d->sizes.reserve(nv);
  for (const auto& s : system.splits()) {
    for (Side side : {Side::kSmall, Side::kLarge}) {
      d->counts.push_back(to_counts(s.part(side), system.ground()));
      d->sizes.push_back(s.part(side).size());
    }
  }
  d->out.assign(nv, 0);
  d->in.assign(nv, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      if ((u >> 1) == (v >> 1) || d->sizes[u] >= d->sizes[v]) continue;
      if (counts_leq(d->counts[u], d->counts[v])) {
        d->out[u] |= VertexMask{1} << v;
        d->in[v] |= VertexMask{1} << u;
      }
    }
  }
  d->topo.resize(nv);
  std::iota(d->topo.begin(), d->topo.end(), 0);
  std::stable_sort(d->topo.begin(), d->topo.end(),
                   [&](int a, int b) { return d->sizes[a] < d->sizes[b]; });
  d->system = std::move(system);
  data_ = std::move(d);
}

const SplitSystem& ContainmentGraph::system() const { return data_->system; }
std::size_t ContainmentGraph::split_count() const { return data_->system.size(); }

const Multiset& ContainmentGraph::part(int v) const {
  return data_->system[split_of(v)].part(side_of(v));
}
const Counts& ContainmentGraph::counts(int v) const { return data_->counts[v]; }
std::size_t ContainmentGraph::part_size(int v) const { return data_->sizes[v]; }
VertexMask ContainmentGraph::out_mask(int v) const { return data_->out[v]; }
VertexMask ContainmentGraph::in_mask(int v) const { return data_->in[v]; }

std::size_t ContainmentGraph::arc_count() const {
  std::size_t n = 0;
  for (auto m : data_->out) n += std::popcount(m);
  return n;
}

std::vector<Arc> ContainmentGraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < static_cast<int>(vertex_count()); ++u) {
    for (VertexMask m = data_->out[u]; m; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

std::vector<Arc> ContainmentGraph::arcs_between(std::size_t i, std::size_t j) const {
  std::vector<Arc> out;
  const VertexMask targets = vertices_of_splits(std::uint32_t{1} << j);
  for (Side side : {Side::kSmall, Side::kLarge}) {
    int u = vertex_of(i, side);
    for (VertexMask m = data_->out[u] & targets; m; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

PairClass ContainmentGraph::classify_pair(std::size_t i, std::size_t j) const {
  if (i == j) throw InputError("classify_pair needs two distinct splits");
  if (i >= split_count() || j >= split_count()) {
    throw InputError("split index out of range");
  }
  switch (arcs_between(i, j).size()) {
    case 0:
      return PairClass::kNoEdges;
    case 1:
      return PairClass::kD1;
    case 2:
      return PairClass::kD2;
    default:
      throw ContractError("split pair with more than two arcs in one direction");
  }
}

const std::vector<int>& ContainmentGraph::topological_order() const {
  return data_->topo;
}

VertexMask ContainmentGraph::vertices_of_splits(std::uint32_t split_mask) {
  VertexMask out = 0;
  for (std::uint32_t m = split_mask; m; m &= m - 1) {
    out |= VertexMask{3} << (2 * std::countr_zero(m));
  }
  return out;
}

std::string ContainmentGraph::vertex_label(int v) const {
  return part(v).braced() + " / S" + std::to_string(split_of(v) + 1);
}

ContainmentGraph build_scg(const SplitSystem& system) {
  return ContainmentGraph(system);
}

bool is_thin(const ContainmentGraph& g) {
  for (std::size_t j = 1; j < g.split_count(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.classify_pair(i, j) != PairClass::kD1) return false;
    }
  }
  return true;
}

bool is_thin(const SplitSystem& system) { return is_thin(ContainmentGraph(system)); }

}  // namespace msplit
