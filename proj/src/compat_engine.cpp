#include "msplit/compat_engine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "msplit/errors.hpp"

namespace msplit {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

MTree single_vertex_tree(const Multiset& ground) {
  RawTree raw;
  raw.labels.push_back(ground);
  return validate(std::move(raw), ground);
}

}  // namespace

MTree build_tree(const ThinSubgraph& t) {
  if (!t.consistent()) throw ContractError("build_tree needs a consistent thin subgraph");
  const ContainmentGraph& g = t.graph();
  const SplitSystem& system = g.system();
  if (system.empty()) return single_vertex_tree(system.ground());

  const std::size_t nv = g.vertex_count();
  UnionFind classes(nv);
  for (const Arc& a : t.critical_arcs()) {
    classes.unite(static_cast<std::size_t>(ContainmentGraph::mate(a.from)),
                  static_cast<std::size_t>(a.to));
  }

  std::vector<Counts> label_counts(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    Counts c = g.counts(static_cast<int>(v));
    for (VertexMask m = t.critical_in(static_cast<int>(v)); m; m &= m - 1) {
      const auto& src = g.counts(std::countr_zero(m));
      for (std::size_t k = 0; k < c.size(); ++k) c[k] -= src[k];
    }
    label_counts[v] = std::move(c);
  }

  std::map<std::size_t, std::size_t> tree_vertex;  // class root -> tree vertex
  RawTree raw;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t root = classes.find(v);
    auto [it, inserted] = tree_vertex.emplace(root, raw.labels.size());
    if (inserted) {
      raw.labels.push_back(from_counts(label_counts[v], system.ground()));
    } else if (label_counts[v] != label_counts[root]) {
      throw ContractError("vertices of one equivalence class carry different labels");
    }
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    raw.edges.emplace_back(tree_vertex.at(classes.find(2 * i)),
                           tree_vertex.at(classes.find(2 * i + 1)));
  }

  MTree tree = [&] {
    try {
      return validate(std::move(raw), system.ground());
    } catch (const TreeError& e) {
      throw ContractError(std::string("constructed tree is not an M-tree: ") + e.what());
    }
  }();
  auto induced = induced_splits(tree);
  std::sort(induced.begin(), induced.end());
  if (induced != system.sorted_splits()) {
    throw ContractError("constructed tree does not represent the split system");
  }
  return tree;
}

CompatibilityResult check_compatibility(const SplitSystem& system, const SearchLimits& limits) {
  CompatibilityResult result;
  ContainmentGraph g(system);
  std::optional<ThinSubgraph> found;
  const SearchOutcome outcome = for_each_consistent_thin_subgraph(
      g,
      [&](const ThinSubgraph& t) {
        found = t;
        return false;
      },
      limits);
  if (found) {
    result.compatible = true;
    result.representation = build_tree(*found);
    result.witness = std::move(found);
  } else {
    result.truncated = outcome == SearchOutcome::kTruncated;
  }
  return result;
}

std::string subgraph_descriptor(const ThinSubgraph& t) {
  const ContainmentGraph& g = t.graph();
  const int nv = static_cast<int>(g.vertex_count());

  // Colour classes: vertices grouped by part, classes ordered by part.
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.part(a) < g.part(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in order
  for (int k = 0; k < nv;) {
    int e = k + 1;
    while (e < nv && g.part(order[e]) == g.part(order[k])) ++e;
    blocks.emplace_back(k, e);
    k = e;
  }
  std::size_t perms = 1;
  for (auto [b, e] : blocks) {
    for (std::size_t f = 2; f <= e - b; ++f) {
      perms *= f;
      if (perms > 40320) throw BudgetExceeded("too many equal parts to canonicalise");
    }
  }

  std::vector<std::pair<int, int>> best;
  bool have_best = false;
  std::vector<int> pos(nv);
  while (true) {
    for (int k = 0; k < nv; ++k) pos[order[k]] = k;
    std::vector<std::pair<int, int>> enc;
    for (const Arc& a : t.arcs()) enc.emplace_back(pos[a.from], pos[a.to]);
    std::sort(enc.begin(), enc.end());
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
    // Advance to the next combination of within-block permutations.
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<long>(blocks[b].first);
      auto last = order.begin() + static_cast<long>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }

  std::string out;
  for (auto [u, v] : best) {
    if (!out.empty()) out += "; ";
    out += g.part(order[u]).braced() + "#" + std::to_string(u) + " -> " +
           g.part(order[v]).braced() + "#" + std::to_string(v);
  }
  return out.empty() ? "(no arcs)" : out;
}

ThinSubgraph thin_subgraph_from_tree(const ContainmentGraph& g, const MTree& tree) {
  const SplitSystem& system = g.system();
  if (tree.ground() != system.ground()) throw InputError("tree is over a different ground");
  if (tree.edge_count() != system.size()) {
    throw InputError("tree edge count differs from the number of splits");
  }
  const auto induced = induced_splits(tree);
  std::vector<bool> used(induced.size(), false);
  const std::size_t tv = tree.vertex_count();
  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<bool>> component(nv);

  for (std::size_t i = 0; i < system.size(); ++i) {
    std::size_t e = 0;
    while (e < induced.size() && (used[e] || induced[e] != system[i])) ++e;
    if (e == induced.size()) throw InputError("tree does not represent the split system");
    used[e] = true;
    const auto [a, b] = tree.edges()[e];
    // Vertices on a's side of edge e.
    std::vector<bool> side(tv, false);
    std::vector<std::size_t> stack{a};
    side[a] = true;
    Multiset sum;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      sum += tree.label(u);
      for (std::size_t w : tree.neighbors(u)) {
        if (!side[w] && !(u == a && w == b)) {
          side[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::vector<bool> other(tv);
    for (std::size_t u = 0; u < tv; ++u) other[u] = !side[u];
    const bool a_is_small = sum == system[i].small();
    component[2 * i] = a_is_small ? side : other;
    component[2 * i + 1] = a_is_small ? other : side;
  }

  auto inside = [&](std::size_t x, std::size_t y) {
    for (std::size_t u = 0; u < tv; ++u) {
      if (component[x][u] && !component[y][u]) return false;
    }
    return true;
  };
  std::vector<VertexMask> out(nv, 0);
  for (std::size_t x = 0; x < nv; ++x) {
    for (std::size_t y = 0; y < nv; ++y) {
      if ((x >> 1) != (y >> 1) && inside(x, y)) out[x] |= ContainmentGraph::bit(static_cast<int>(y));
    }
  }
  return ThinSubgraph(g, std::move(out));
}

RepresentationCensus census_representations(const SplitSystem& system,
                                            const CensusLimits& limits) {
  RepresentationCensus census;
  ContainmentGraph g(system);
  std::map<std::string, std::size_t> class_of;
  const SearchOutcome outcome = for_each_consistent_thin_subgraph(
      g,
      [&](const ThinSubgraph& t) {
        if (census.thin_subgraph_count >= limits.max_subgraphs) {
          census.truncated = true;
          return false;
        }
        ++census.thin_subgraph_count;
        MTree tree = build_tree(t);
        std::string form = canonical_form(tree);
        std::string desc = subgraph_descriptor(t);
        auto it = class_of.find(desc);
        if (it == class_of.end()) {
          for (const auto& c : census.iso_classes) {
            if (c.tree_form == form) {
              census.bijection_violations.push_back(
                  "non-isomorphic thin subgraphs give isomorphic trees " + form);
            }
          }
          class_of.emplace(desc, census.iso_classes.size());
          census.iso_classes.push_back({desc, form, std::move(tree), 1});
        } else {
          auto& c = census.iso_classes[it->second];
          ++c.members;
          if (c.tree_form != form) {
            census.bijection_violations.push_back(
                "isomorphic thin subgraphs give non-isomorphic trees " + c.tree_form +
                " and " + form);
          }
        }
        return true;
      },
      limits.search);
  if (outcome == SearchOutcome::kTruncated) census.truncated = true;
  census.unique = census.iso_classes.size() == 1;
  return census;
}

}  // namespace msplit
