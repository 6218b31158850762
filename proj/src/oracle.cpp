#include "msplit/oracle.hpp"

#include <algorithm>
#include <omp.h>

#include "msplit/errors.hpp"

namespace msplit {

namespace oracle {

namespace {

// Plain AHU encoding of an unlabelled tree rooted at `v`.
std::string shape_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v,
                       std::size_t from) {
  std::vector<std::string> kids;
  for (std::size_t w : adj[v]) {
    if (w != from) kids.push_back(shape_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::string unlabelled_form(const Shape& s) {
  std::vector<std::vector<std::size_t>> adj(s.vertices);
  for (auto [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Rooting at every vertex is affordable at oracle sizes.
  std::string best;
  for (std::size_t v = 0; v < s.vertices; ++v) {
    std::string c = shape_code(adj, v, s.vertices);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> decode_pruefer(
    const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : seq) ++degree[x];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  std::size_t u = n, w = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) (u == n ? u : w) = v;
  }
  edges.emplace_back(u, w);
  return edges;
}

// All weak compositions of `total` into `parts` parts.
std::vector<std::vector<std::uint16_t>> compositions(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> cur(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
    if (k + 1 == parts) {
      cur[k] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      cur[k] = static_cast<std::uint16_t>(x);
      rec(k + 1, left - x);
    }
  };
  rec(0, total);
  return out;
}

struct ShapePlan {
  Shape shape;
  std::vector<std::size_t> degree;
  std::vector<std::size_t> parent;  // rooted at 0
  std::vector<std::size_t> post;    // children before parents
};

ShapePlan plan(const Shape& s) {
  ShapePlan p{s, std::vector<std::size_t>(s.vertices, 0), {}, {}};
  std::vector<std::vector<std::size_t>> adj(s.vertices);
  for (auto [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++p.degree[a];
    ++p.degree[b];
  }
  p.parent.assign(s.vertices, s.vertices);
  p.parent[0] = 0;
  std::vector<std::size_t> pre, stack{0};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    pre.push_back(u);
    for (std::size_t w : adj[u]) {
      if (p.parent[w] == s.vertices) {
        p.parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  p.post.assign(pre.rbegin(), pre.rend());
  return p;
}

struct Distribution {
  std::vector<std::vector<std::vector<std::uint16_t>>> per_element;
  std::size_t combos = 1;
};

Distribution distribution(const Counts& ground, std::size_t vertices) {
  Distribution d;
  for (auto m : ground) {
    d.per_element.push_back(compositions(m, vertices));
    d.combos *= d.per_element.back().size();
  }
  return d;
}

// Decodes linear index `idx` into per-vertex labels; false if M2 fails.
bool labels_at(const Distribution& d, const ShapePlan& p, std::size_t idx,
               std::vector<Counts>& labels) {
  const std::size_t width = d.per_element.size();
  for (auto& l : labels) std::fill(l.begin(), l.end(), 0);
  for (std::size_t k = 0; k < width; ++k) {
    const auto& options = d.per_element[k];
    const auto& comp = options[idx % options.size()];
    idx /= options.size();
    for (std::size_t v = 0; v < comp.size(); ++v) labels[v][k] = comp[v];
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (p.degree[v] == 1 || p.degree[v] == 2) {
      if (std::all_of(labels[v].begin(), labels[v].end(), [](auto x) { return x == 0; })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ShapePlan> plans_for(std::size_t edges) {
  std::vector<ShapePlan> out;
  for (const auto& s : tree_shapes(edges + 1)) out.push_back(plan(s));
  return out;
}

}  // namespace

int worker_count() { return omp_get_max_threads(); }

std::vector<Shape> tree_shapes(std::size_t vertices) {
  if (vertices == 0) return {};
  if (vertices == 1) return {Shape{1, {}}};
  if (vertices == 2) return {Shape{2, {{0, 1}}}};
  std::vector<Shape> out;
  std::set<std::string> seen;
  std::vector<std::size_t> seq(vertices - 2, 0);
  while (true) {
    Shape s{vertices, decode_pruefer(seq, vertices)};
    if (seen.insert(unlabelled_form(s)).second) out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == vertices) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return out;
}

SplitKey split_key(const SplitSystem& system) {
  SplitKey key;
  for (const auto& s : system.splits()) {
    Counts a = to_counts(s.small(), system.ground());
    Counts b = to_counts(s.large(), system.ground());
    key.push_back(std::min(a, b));
  }
  std::sort(key.begin(), key.end());
  return key;
}

SplitKey induced_key(const Shape& shape, const std::vector<Counts>& labels,
                     const Counts& ground) {
  // Root the shape at vertex 0 via repeated relaxation (shapes are tiny).
  const std::size_t nv = shape.vertices;
  std::vector<std::size_t> parent(nv, nv);
  parent[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : shape.edges) {
      if (parent[a] != nv && parent[b] == nv) {
        parent[b] = a;
        changed = true;
      } else if (parent[b] != nv && parent[a] == nv) {
        parent[a] = b;
        changed = true;
      }
    }
  }
  std::vector<Counts> below(labels);
  // Depth order: push sums upward until stable.
  std::vector<std::size_t> depth(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t u = v; u != 0; u = parent[u]) ++depth[v];
  }
  std::vector<std::size_t> order(nv);
  for (std::size_t v = 0; v < nv; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return depth[x] > depth[y]; });
  for (std::size_t v : order) {
    if (v == 0) continue;
    for (std::size_t k = 0; k < ground.size(); ++k) below[parent[v]][k] += below[v][k];
  }
  SplitKey key;
  for (auto [a, b] : shape.edges) {
    const std::size_t child = parent[b] == a ? b : a;
    Counts part = below[child];
    Counts rest(ground.size());
    for (std::size_t k = 0; k < ground.size(); ++k) rest[k] = ground[k] - part[k];
    key.push_back(std::min(part, rest));
  }
  std::sort(key.begin(), key.end());
  return key;
}

void for_each_labeling_serial(const Multiset& ground, std::size_t edges,
                              const LabelingVisitor& visit) {
  const Counts g = to_counts(ground, ground);
  for (const auto& p : plans_for(edges)) {
    const Distribution d = distribution(g, p.shape.vertices);
    std::vector<Counts> labels(p.shape.vertices, Counts(g.size(), 0));
    for (std::size_t idx = 0; idx < d.combos; ++idx) {
      if (labels_at(d, p, idx, labels)) visit(0, p.shape, labels);
    }
  }
}

void for_each_labeling(const Multiset& ground, std::size_t edges, const LabelingVisitor& visit) {
  const Counts g = to_counts(ground, ground);
  for (const auto& p : plans_for(edges)) {
    const Distribution d = distribution(g, p.shape.vertices);
    const auto combos = static_cast<long long>(d.combos);
#pragma omp parallel
    {
      const int worker = omp_get_thread_num();
      std::vector<Counts> labels(p.shape.vertices, Counts(g.size(), 0));
#pragma omp for schedule(static)
      for (long long idx = 0; idx < combos; ++idx) {
        if (labels_at(d, p, static_cast<std::size_t>(idx), labels)) {
          visit(worker, p.shape, labels);
        }
      }
    }
  }
}

namespace {

MTree to_mtree(const Shape& shape, const std::vector<Counts>& labels, const Multiset& ground) {
  RawTree raw;
  for (const auto& l : labels) raw.labels.push_back(from_counts(l, ground));
  raw.edges = shape.edges;
  return validate(std::move(raw), ground);
}

}  // namespace

Catalogue::Catalogue(const Multiset& ground, std::size_t max_edges, bool parallel)
    : ground_(ground), max_edges_(max_edges), by_edges_(max_edges + 1) {
  const Counts g = to_counts(ground, ground);
  for (std::size_t e = 1; e <= max_edges; ++e) {
    std::vector<std::map<SplitKey, std::set<std::string>>> local(
        parallel ? static_cast<std::size_t>(worker_count()) : 1);
    auto visit = [&](int worker, const Shape& shape, const std::vector<Counts>& labels) {
      local[static_cast<std::size_t>(worker)][induced_key(shape, labels, g)].insert(
          canonical_form(to_mtree(shape, labels, ground_)));
    };
    if (parallel) {
      for_each_labeling(ground, e, visit);
    } else {
      for_each_labeling_serial(ground, e, visit);
    }
    auto& merged = by_edges_[e];
    for (auto& m : local) {
      for (auto& [key, forms] : m) merged[key].merge(forms);
    }
  }
}

const std::set<std::string>* Catalogue::representations(const SplitSystem& system) const {
  if (system.ground() != ground_) throw InputError("catalogue is for a different ground");
  if (system.size() == 0 || system.size() > max_edges_) {
    throw BudgetExceeded("catalogue covers 1.." + std::to_string(max_edges_) + " splits");
  }
  const auto& m = by_edges_[system.size()];
  auto it = m.find(split_key(system));
  return it == m.end() ? nullptr : &it->second;
}

std::size_t Catalogue::representation_count(const SplitSystem& system) const {
  const auto* forms = representations(system);
  return forms ? forms->size() : 0;
}

std::size_t Catalogue::system_count() const {
  std::size_t n = 0;
  for (const auto& m : by_edges_) n += m.size();
  return n;
}

}  // namespace oracle

OracleResult oracle_compatible(const SplitSystem& system, const OracleBudget& budget) {
  if (system.size() > budget.max_splits) {
    throw BudgetExceeded("oracle budget allows at most " + std::to_string(budget.max_splits) +
                         " splits, system has " + std::to_string(system.size()));
  }
  if (system.ground().size() > budget.max_ground) {
    throw BudgetExceeded("oracle budget allows a ground of at most " +
                         std::to_string(budget.max_ground) + " elements, ground has " +
                         std::to_string(system.ground().size()));
  }
  const Multiset& ground = system.ground();
  const Counts g = to_counts(ground, ground);
  const oracle::SplitKey target = oracle::split_key(system);
  std::vector<std::vector<std::pair<oracle::Shape, std::vector<Counts>>>> hits(
      static_cast<std::size_t>(oracle::worker_count()));
  oracle::for_each_labeling(
      ground, system.size(),
      [&](int worker, const oracle::Shape& shape, const std::vector<Counts>& labels) {
        if (oracle::induced_key(shape, labels, g) == target) {
          hits[static_cast<std::size_t>(worker)].emplace_back(shape, labels);
        }
      });
  std::map<std::string, MTree> distinct;
  for (const auto& bucket : hits) {
    for (const auto& [shape, labels] : bucket) {
      MTree t = oracle::to_mtree(shape, labels, ground);
      distinct.emplace(canonical_form(t), std::move(t));
    }
  }
  OracleResult result;
  result.compatible = !distinct.empty();
  for (auto& [form, tree] : distinct) result.trees.push_back(std::move(tree));
  return result;
}

}  // namespace msplit
