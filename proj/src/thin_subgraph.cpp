#include "msplit/thin_subgraph.hpp"

#include <bit>
#include <limits>

#include "msplit/errors.hpp"

namespace msplit {

namespace kernel {

std::vector<VertexMask> critical_out_masks(const ContainmentGraph& g,
                                           const std::vector<VertexMask>& out,
                                           VertexMask active) {
  const std::size_t nv = g.vertex_count();
  std::vector<VertexMask> reach(nv, 0);
  std::vector<VertexMask> crit(nv, 0);
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int u = *it;
    if (!((active >> u) & 1)) continue;
    const VertexMask nbrs = out[u] & active;
    VertexMask r = 0;
    for (VertexMask m = nbrs; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      r |= ContainmentGraph::bit(w) | reach[w];
    }
    reach[u] = r;
    for (VertexMask m = nbrs; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      VertexMask via_others = 0;
      for (VertexMask o = nbrs & ~ContainmentGraph::bit(v); o; o &= o - 1) {
        via_others |= reach[std::countr_zero(o)];
      }
      if (!((via_others >> v) & 1)) crit[u] |= ContainmentGraph::bit(v);
    }
  }
  return crit;
}

bool critical_unions_fit(const ContainmentGraph& g,
                         const std::vector<VertexMask>& crit_out,
                         VertexMask active) {
  const std::size_t nv = g.vertex_count();
  std::vector<VertexMask> crit_in(nv, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    for (VertexMask m = crit_out[u]; m; m &= m - 1) {
      crit_in[std::countr_zero(m)] |= ContainmentGraph::bit(static_cast<int>(u));
    }
  }
  const std::size_t width = g.system().ground().distinct();
  std::vector<std::uint32_t> acc(width);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!((active >> v) & 1)) continue;
    const VertexMask in = crit_in[v] & active;
    if (std::popcount(in) < 2) continue;  // a single in-arc is a containment
    std::fill(acc.begin(), acc.end(), 0);
    for (VertexMask m = in; m; m &= m - 1) {
      const auto& c = g.counts(std::countr_zero(m));
      for (std::size_t k = 0; k < width; ++k) acc[k] += c[k];
    }
    const auto& target = g.counts(static_cast<int>(v));
    for (std::size_t k = 0; k < width; ++k) {
      if (acc[k] > target[k]) return false;
    }
  }
  return true;
}

}  // namespace kernel

namespace {

VertexMask all_vertices(const ContainmentGraph& g) {
  const std::size_t nv = g.vertex_count();
  return nv == 64 ? ~VertexMask{0} : (VertexMask{1} << nv) - 1;
}

}  // namespace

ThinSubgraph::ThinSubgraph(ContainmentGraph graph, std::vector<VertexMask> chosen_out)
    : graph_(std::move(graph)), out_(std::move(chosen_out)) {
  const std::size_t nv = graph_.vertex_count();
  if (out_.size() != nv) {
    throw ContractError("thin subgraph needs one out-mask per vertex");
  }
  for (std::size_t u = 0; u < nv; ++u) {
    if (out_[u] & ~graph_.out_mask(static_cast<int>(u))) {
      throw ContractError("thin subgraph arc is not an arc of the containment graph");
    }
  }
  const std::size_t n = graph_.split_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const VertexMask targets = ContainmentGraph::vertices_of_splits(std::uint32_t{1} << j);
      const int a = ContainmentGraph::vertex_of(i, Side::kSmall);
      const int b = ContainmentGraph::vertex_of(i, Side::kLarge);
      const VertexMask ab = out_[a] & targets;
      const VertexMask bb = out_[b] & targets;
      if (std::popcount(ab) + std::popcount(bb) != 1) {
        throw ContractError("restriction to splits S" + std::to_string(i + 1) +
                            ", S" + std::to_string(j + 1) + " is not a D1 pattern");
      }
      // The partner arc (mate(to) -> mate(from)) must be chosen too.
      const int from = ab ? a : b;
      const int to = std::countr_zero(ab ? ab : bb);
      if (!has_arc(ContainmentGraph::mate(to), ContainmentGraph::mate(from))) {
        throw ContractError("thin subgraph is not closed under complement symmetry");
      }
    }
  }
  const VertexMask active = all_vertices(graph_);
  crit_out_ = kernel::critical_out_masks(graph_, out_, active);
  crit_in_.assign(nv, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    for (VertexMask m = crit_out_[u]; m; m &= m - 1) {
      crit_in_[std::countr_zero(m)] |= ContainmentGraph::bit(static_cast<int>(u));
    }
  }
  consistent_ = kernel::critical_unions_fit(graph_, crit_out_, active);
}

std::vector<Arc> ThinSubgraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < static_cast<int>(out_.size()); ++u) {
    for (VertexMask m = out_[u]; m; m &= m - 1) out.push_back({u, std::countr_zero(m)});
  }
  return out;
}

std::vector<Arc> ThinSubgraph::critical_arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < static_cast<int>(crit_out_.size()); ++u) {
    for (VertexMask m = crit_out_[u]; m; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

std::vector<Arc> critical_arcs(const ThinSubgraph& t) { return t.critical_arcs(); }
bool is_consistent(const ThinSubgraph& t) { return t.consistent(); }

ThinLayout thin_layout(const ContainmentGraph& g) {
  ThinLayout layout;
  layout.forced_out.assign(g.vertex_count(), 0);
  for (std::size_t j = 1; j < g.split_count(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto arcs = g.arcs_between(i, j);
      if (arcs.empty()) {
        if (!layout.blocked) {
          layout.blocked = true;
          layout.blocked_i = i;
          layout.blocked_j = j;
        }
        continue;
      }
      if (arcs.size() > 2) {
        throw ContractError("split pair with more than two arcs in one direction");
      }
      auto partner = [](Arc a) {
        return Arc{ContainmentGraph::mate(a.to), ContainmentGraph::mate(a.from)};
      };
      if (arcs.size() == 1) {
        const Arc p = partner(arcs[0]);
        layout.forced_out[arcs[0].from] |= ContainmentGraph::bit(arcs[0].to);
        layout.forced_out[p.from] |= ContainmentGraph::bit(p.to);
      } else {
        ThinLayout::Branch b;
        b.i = i;
        b.j = j;
        for (int k = 0; k < 2; ++k) {
          b.options[k][0] = arcs[k];
          b.options[k][1] = partner(arcs[k]);
        }
        layout.branches.push_back(b);
      }
    }
  }
  return layout;
}

std::uint64_t thin_subgraph_count(const ContainmentGraph& g) {
  const ThinLayout layout = thin_layout(g);
  if (layout.blocked) return 0;
  if (layout.branches.size() >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << layout.branches.size();
}

namespace {

void apply_option(std::vector<VertexMask>& out, const ThinLayout::Branch& b, int k) {
  for (const Arc& a : b.options[k]) out[a.from] |= ContainmentGraph::bit(a.to);
}

class Enumerator {
 public:
  Enumerator(const ContainmentGraph& g, const ThinVisitor& visit,
             const SearchLimits& limits, bool prune)
      : g_(g), visit_(visit), limits_(limits), prune_(prune), layout_(thin_layout(g)) {
    // Branch ranges per closing split j.
    first_branch_.assign(g.split_count() + 1, 0);
    std::size_t b = 0;
    for (std::size_t j = 0; j <= g.split_count(); ++j) {
      while (b < layout_.branches.size() && layout_.branches[b].j < j) ++b;
      first_branch_[j] = b;
    }
  }

  SearchOutcome run() {
    if (layout_.blocked) return SearchOutcome::kExhausted;
    if (g_.split_count() == 0) {
      return visit_(ThinSubgraph(g_, {})) ? SearchOutcome::kExhausted
                                          : SearchOutcome::kStopped;
    }
    std::vector<VertexMask> out(g_.vertex_count(), 0);
    descend(1, out);
    return outcome_;
  }

 private:
  // Adds split k (and all pairs (i, k), i < k) to the partial selection.
  bool descend(std::size_t k, const std::vector<VertexMask>& out) {
    const std::size_t n = g_.split_count();
    if (k == n) {
      ThinSubgraph t(g_, out);
      if (prune_ && !t.consistent()) return true;
      if (!visit_(t)) {
        outcome_ = SearchOutcome::kStopped;
        return false;
      }
      return true;
    }
    const VertexMask placed =
        ContainmentGraph::vertices_of_splits((std::uint32_t{1} << (k + 1)) - 1);
    std::vector<VertexMask> base = out;
    for (std::size_t v = 0; v < base.size(); ++v) {
      const VertexMask row = ((v >> 1) <= k) ? layout_.forced_out[v] & placed : 0;
      base[v] |= row;
    }
    const std::size_t lo = first_branch_[k];
    const std::size_t hi = first_branch_[k + 1];
    const std::size_t d = hi - lo;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
      if (++nodes_ > limits_.max_nodes) {
        outcome_ = SearchOutcome::kTruncated;
        return false;
      }
      std::vector<VertexMask> next = base;
      for (std::size_t t = 0; t < d; ++t) {
        // Earlier branches are the more significant digits.
        apply_option(next, layout_.branches[lo + t],
                     static_cast<int>((choice >> (d - 1 - t)) & 1));
      }
      if (prune_ && k + 1 < n) {
        auto crit = kernel::critical_out_masks(g_, next, placed);
        if (!kernel::critical_unions_fit(g_, crit, placed)) continue;
      }
      if (!descend(k + 1, next)) return false;
    }
    return true;
  }

  const ContainmentGraph& g_;
  const ThinVisitor& visit_;
  const SearchLimits& limits_;
  bool prune_;
  ThinLayout layout_;
  std::vector<std::size_t> first_branch_;
  std::uint64_t nodes_ = 0;
  SearchOutcome outcome_ = SearchOutcome::kExhausted;
};

}  // namespace

SearchOutcome for_each_thin_subgraph(const ContainmentGraph& g,
                                     const ThinVisitor& visit,
                                     const SearchLimits& limits) {
  return Enumerator(g, visit, limits, /*prune=*/false).run();
}

SearchOutcome for_each_consistent_thin_subgraph(const ContainmentGraph& g,
                                                const ThinVisitor& visit,
                                                const SearchLimits& limits) {
  return Enumerator(g, visit, limits, /*prune=*/true).run();
}

namespace reference {

std::vector<ThinSubgraph> consistent_thin_subgraphs(const ContainmentGraph& g) {
  std::vector<ThinSubgraph> out;
  if (g.split_count() == 0) {
    out.emplace_back(g, std::vector<VertexMask>{});
    return out;
  }
  const ThinLayout layout = thin_layout(g);
  if (layout.blocked) return out;
  const std::size_t d = layout.branches.size();
  if (d >= 32) throw BudgetExceeded("reference enumeration limited to 31 D2 pairs");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<VertexMask> arcs = layout.forced_out;
    for (std::size_t t = 0; t < d; ++t) {
      apply_option(arcs, layout.branches[t], static_cast<int>((mask >> (d - 1 - t)) & 1));
    }
    ThinSubgraph t(g, std::move(arcs));
    if (t.consistent()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace reference

}  // namespace msplit
