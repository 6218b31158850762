#include "msplit/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "msplit/errors.hpp"

namespace msplit {

namespace {

std::uint32_t full_mask(std::size_t n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t t = 0; t < idx.size(); ++t) os << (t ? "," : "") << idx[t] + 1;
  os << '}';
  return os.str();
}

std::string describe(const SplitSystem& system) {
  std::ostringstream os;
  os << "ground " << system.ground().braced() << ";";
  for (std::size_t i = 0; i < system.size(); ++i) {
    os << " S" << i + 1 << " = " << system[i].str() << ";";
  }
  return os.str();
}

}  // namespace

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

TerminalReport terminal_report(const ContainmentGraph& g, std::uint32_t split_mask) {
  TerminalReport r;
  const VertexMask active = ContainmentGraph::vertices_of_splits(split_mask);
  const auto n = static_cast<std::size_t>(std::popcount(split_mask));
  const auto splits = mask_indices(split_mask);
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (!((active >> v) & 1)) continue;
    if (g.in_mask(v) & active) continue;
    r.terminal.push_back(v);
    const VertexMask out = g.out_mask(v) & active;
    if (static_cast<std::size_t>(std::popcount(out)) == n - 1) r.superterminal.push_back(v);
    std::vector<int> sides;
    bool per_split = true;
    for (std::size_t j : splits) {
      if (j == ContainmentGraph::split_of(v)) {
        sides.push_back(v);
        continue;
      }
      const VertexMask both = out & ContainmentGraph::vertices_of_splits(std::uint32_t{1} << j);
      if (std::popcount(both) != 1) {
        per_split = false;
        break;
      }
      sides.push_back(std::countr_zero(both));
    }
    if (per_split) {
      r.per_split_superterminal.push_back(v);
      r.containing_side.push_back(std::move(sides));
    }
  }
  return r;
}

TerminalReport terminal_report(const ContainmentGraph& g) {
  return terminal_report(g, full_mask(g.split_count()));
}

TerminalReport terminal_report(const SplitSystem& system) {
  return terminal_report(ContainmentGraph(system));
}

CheckRecord check_supcore(const SplitSystem& system) {
  CheckRecord rec("lmsupcore");
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (system[i] == system[j] || !pairwise_compatible(system[i], system[j])) {
        rec.notice = "skipped: splits not pairwise compatible";
        return rec;
      }
    }
  }
  const ContainmentGraph g(system);
  const TerminalReport r = terminal_report(g);
  for (int v : r.terminal) {
    // Some element of the part is missing from its complement.
    const Counts& own = g.counts(v);
    const Counts& other = g.counts(ContainmentGraph::mate(v));
    bool hypothesis = false;
    for (std::size_t k = 0; k < own.size(); ++k) hypothesis |= own[k] > 0 && other[k] == 0;
    if (!hypothesis) continue;
    ++rec.applicable;
    if (std::find(r.superterminal.begin(), r.superterminal.end(), v) == r.superterminal.end()) {
      rec.violations.push_back("terminal " + g.vertex_label(v) + " not superterminal; " +
                               describe(system));
    }
  }
  return rec;
}

SubsetLattice::SubsetLattice(const SplitSystem& system, const LatticeLimits& limits)
    : n_(system.size()) {
  if (n_ > limits.max_splits || n_ > 31) {
    truncated_ = true;
    return;
  }
  const std::uint32_t top = full_mask(n_);
  compat_.assign(std::size_t{top} + 1, 1);
  ++engine_calls_;
  const CompatibilityResult whole = check_compatibility(system, limits.search);
  truncated_ |= whole.truncated;
  if (whole.compatible) return;
  for (std::uint32_t mask = 1; mask <= top; ++mask) {
    bool below = true;
    for (std::uint32_t rest = mask; rest && below; rest &= rest - 1) {
      below = compat_[mask ^ (rest & -rest)];
    }
    if (!below) {
      compat_[mask] = 0;
      continue;
    }
    bool ok = true;
    if (mask == top) {
      ok = false;
    } else if (std::popcount(mask) > 1) {
      ++engine_calls_;
      const CompatibilityResult r =
          check_compatibility(system.subsystem(mask_indices(mask)), limits.search);
      truncated_ |= r.truncated;
      ok = r.compatible;
    }
    compat_[mask] = ok ? 1 : 0;
    if (!ok) minimal_.push_back(mask);
  }
}

bool SubsetLattice::compatible(std::uint32_t mask) const {
  if (truncated_ && compat_.empty()) throw BudgetExceeded("subset lattice over budget");
  return compat_.at(mask) != 0;
}

MinimalSubsets minimal_incompatible_subsets(const SplitSystem& system,
                                            const LatticeLimits& limits) {
  const SubsetLattice lattice(system, limits);
  MinimalSubsets out;
  out.truncated = lattice.truncated();
  for (auto m : lattice.minimal_incompatible()) out.subsets.push_back(mask_indices(m));
  return out;
}

BoundReport bound_report(const SplitSystem& system, const SubsetLattice& lattice) {
  BoundReport r;
  r.delta = delta(system.ground());
  r.n = system.size();
  r.truncated = lattice.truncated();
  const std::size_t d = r.delta;
  for (auto m : lattice.minimal_incompatible()) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    r.minimal_incompatible_subsets.push_back(mask_indices(m));
    r.star_holds &= k <= d + 2;
    r.star3_holds &= k <= d + 3;
    r.ref43_holds &= k <= std::max(2 * d, d + 2);
  }
  return r;
}

BoundReport bound_report(const SplitSystem& system, const LatticeLimits& limits) {
  return bound_report(system, SubsetLattice(system, limits));
}

bool TheoremReport::any_violation() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return !c.holds(); });
}

const CheckRecord* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TheoremReport check_special_theorems(const SplitSystem& system, const SubsetLattice& lattice,
                                     const CompatibilityResult& compat) {
  TheoremReport rep;
  rep.checks.reserve(16);
  rep.truncated = lattice.truncated();
  const ContainmentGraph g(system);
  const std::size_t n = system.size();
  const std::size_t d = delta(system.ground());
  const BoundReport bounds = bound_report(system, lattice);
  const std::string who = describe(system);

  auto record = [&](const std::string& name) -> CheckRecord& {
    rep.checks.push_back(CheckRecord(name));
    return rep.checks.back();
  };
  auto whole = [&](CheckRecord& c, bool applies, bool holds, const std::string& what) {
    if (!applies) return;
    ++c.applicable;
    if (!holds) c.violations.push_back(what + "; " + who);
  };
  std::string minimal_text;
  for (const auto& s : bounds.minimal_incompatible_subsets) minimal_text += " " + index_list(s);
  const std::string sizes_note = "minimal incompatible subsets:" + minimal_text +
                                 " with delta " + std::to_string(d);

  if (lattice.truncated()) {
    auto& c = record("lattice");
    c.notice = "skipped: subset lattice over budget";
    return rep;
  }

  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = split_size(system[i]);
  bool distinct = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) distinct &= !(system[i] == system[j]);
  }
  const bool two_three =
      std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s == 2 || s == 3; });
  const bool equal = n > 0 && std::all_of(sizes.begin(), sizes.end(),
                                          [&](auto s) { return s == sizes.front(); });

  whole(record("ref43"), true, bounds.ref43_holds, sizes_note);
  whole(record("star"), true, bounds.star_holds, sizes_note);
  whole(record("equal"), equal, bounds.star_holds, sizes_note);
  whole(record("cor-thin"), is_thin(g), bounds.star_holds, sizes_note);
  whole(record("twothreeholds"), two_three && distinct, bounds.star3_holds, sizes_note);

  // Every subsystem of at least delta+3 splits has a superterminal part.
  bool tmd2 = true;
  const std::uint32_t top = full_mask(n);
  for (std::uint32_t mask = 1; mask <= top && tmd2 && n > 0; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < d + 3) continue;
    tmd2 = !terminal_report(g, mask).superterminal.empty();
  }
  whole(record("tmd2"), tmd2, bounds.star_holds, sizes_note);

  auto& prdel = record("prdel");
  auto& twothree = record("twothree");
  auto& lmcol = record("lmcol");
  for (auto m : lattice.minimal_incompatible()) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    const auto idx = mask_indices(m);
    const std::string sub = "subset " + index_list(idx) + " k=" + std::to_string(k) +
                            " delta=" + std::to_string(d);
    const TerminalReport tr = terminal_report(g, m);
    rep.superterminal_mismatches +=
        tr.superterminal.size() - tr.per_split_superterminal.size();
    if (k < 3) continue;
    if (tr.superterminal.empty()) rep.open_question.emplace_back(k, d);
    if (!tr.superterminal.empty()) {
      ++prdel.applicable;
      if (d + 2 < k) prdel.violations.push_back(sub + "; " + who);
    }
    bool sub_two_three = true;
    for (auto i : idx) sub_two_three &= sizes[i] == 2 || sizes[i] == 3;
    bool sub_distinct = true;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        sub_distinct &= !(system[idx[a]] == system[idx[b]]);
      }
    }
    if (sub_two_three && sub_distinct) {
      ++twothree.applicable;
      if (d + 3 < k) twothree.violations.push_back(sub + "; " + who);
    }
    ++lmcol.applicable;
    for (auto i : idx) {
      for (Side side : {Side::kSmall, Side::kLarge}) {
        const Multiset& part = system[i].part(side);
        if (unique_part(part, system.ground()) == part) {
          lmcol.violations.push_back(sub + " has S" + std::to_string(i + 1) + " part " +
                                     part.braced() + " of single elements; " + who);
        }
      }
    }
  }

  auto& leaves = record("lmleaves");
  if (compat.compatible && compat.representation) {
    ++leaves.applicable;
    if (!verify::terminal_leaves(g, *compat.representation)) {
      leaves.violations.push_back("terminal part missing from leaves; " + who);
    }
  }
  rep.checks.push_back(check_supcore(system));
  return rep;
}

TheoremReport check_special_theorems(const SplitSystem& system, const LatticeLimits& limits) {
  const SubsetLattice lattice(system, limits);
  return check_special_theorems(system, lattice, check_compatibility(system, limits.search));
}

IntersectionBound intersection_graph_bound(
    const std::vector<Multiset>& parts,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (parts.size() < 2) throw InputError("at least two parts are required");
  Multiset ground;
  for (const auto& p : parts) {
    if (p.empty()) throw InputError("parts must be nonempty");
    ground += p;
  }
  std::vector<std::size_t> root(parts.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::size_t components = parts.size();
  for (auto [a, b] : edges) {
    if (a >= parts.size() || b >= parts.size() || a == b) {
      throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} is not between two distinct parts");
    }
    bool shared = false;
    for (const auto& [name, m] : parts[a].entries()) shared |= parts[b].count(name) > 0;
    if (!shared) {
      throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} joins parts with no common element");
    }
    const auto ra = find(a), rb = find(b);
    if (ra != rb) {
      root[ra] = rb;
      --components;
    }
  }
  IntersectionBound r;
  r.parts = parts.size();
  r.components = components;
  r.delta = delta(ground);
  r.holds = r.delta + r.components >= r.parts;
  return r;
}

std::vector<std::size_t> find_minimal_incompatible_subset(const SplitSystem& system,
                                                          const SearchLimits& limits) {
  if (check_compatibility(system, limits).compatible) return {};
  std::vector<std::size_t> keep(system.size());
  std::iota(keep.begin(), keep.end(), 0);
  for (std::size_t t = keep.size(); t-- > 0;) {
    std::vector<std::size_t> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(t));
    if (!check_compatibility(system.subsystem(trial), limits).compatible) keep = trial;
  }
  return keep;
}

SystemAnalysis analyze_system(const SplitSystem& system, const LatticeLimits& limits) {
  SystemAnalysis a;
  a.n = system.size();
  a.delta = delta(system.ground());
  const ContainmentGraph g(system);
  a.thin = is_thin(g);
  a.compat = check_compatibility(system, limits.search);
  if (a.n > 0) a.terminal = terminal_report(g);
  a.supcore = check_supcore(system);
  const SubsetLattice lattice(system, limits);
  a.bounds = bound_report(system, lattice);
  a.theorems = check_special_theorems(system, lattice, a.compat);
  return a;
}

namespace verify {

bool acyclic(const ContainmentGraph& g) {
  const int nv = static_cast<int>(g.vertex_count());
  std::vector<int> indeg(nv);
  for (int v = 0; v < nv; ++v) indeg[v] = std::popcount(g.in_mask(v));
  std::vector<int> ready;
  for (int v = 0; v < nv; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexMask out = g.out_mask(u); out; out &= out - 1) {
      const int w = std::countr_zero(out);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return seen == nv;
}

bool complement_symmetric(const ContainmentGraph& g) {
  const int nv = static_cast<int>(g.vertex_count());
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      if (g.has_arc(u, v) != g.has_arc(ContainmentGraph::mate(v), ContainmentGraph::mate(u))) {
        return false;
      }
    }
  }
  return true;
}

bool arcs_determined_by_critical(const ThinSubgraph& t) {
  const int nv = static_cast<int>(t.graph().vertex_count());
  for (int u = 0; u < nv; ++u) {
    // Vertices reachable from u along critical arcs.
    VertexMask reach = 0;
    VertexMask frontier = t.critical_out(u);
    while (frontier & ~reach) {
      const VertexMask fresh = frontier & ~reach;
      reach |= fresh;
      frontier = 0;
      for (VertexMask m = fresh; m; m &= m - 1) frontier |= t.critical_out(std::countr_zero(m));
    }
    for (int v = 0; v < nv; ++v) {
      if (ContainmentGraph::split_of(u) == ContainmentGraph::split_of(v)) continue;
      if (t.has_arc(u, v) != static_cast<bool>((reach >> v) & 1)) return false;
    }
  }
  return true;
}

bool critical_transitive(const ThinSubgraph& t) {
  const int nv = static_cast<int>(t.graph().vertex_count());
  for (int w = 0; w < nv; ++w) {
    const VertexMask in = t.critical_in(w);
    for (VertexMask a = in; a; a &= a - 1) {
      const int u = std::countr_zero(a);
      for (VertexMask b = in; b; b &= b - 1) {
        const int x = std::countr_zero(b);
        if (ContainmentGraph::split_of(u) == ContainmentGraph::split_of(x)) continue;
        if (!t.is_critical(u, ContainmentGraph::mate(x))) return false;
      }
    }
  }
  return true;
}

bool terminal_leaves(const ContainmentGraph& g, const MTree& tree) {
  const auto leaves = tree.leaves();
  for (int v : terminal_report(g).terminal) {
    const bool found = std::any_of(leaves.begin(), leaves.end(),
                                   [&](std::size_t x) { return tree.label(x) == g.part(v); });
    if (!found) return false;
  }
  return true;
}

}  // namespace verify

}  // namespace msplit
