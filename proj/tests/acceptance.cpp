// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   msplit_acceptance [--seed=N] [--fixtures=DIR]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msplit/compat_engine.hpp"
#include "msplit/document.hpp"
#include "msplit/oracle.hpp"
#include "msplit/scan.hpp"
#include "msplit/structure.hpp"
#include "msplit/universe.hpp"

using namespace msplit;

namespace {

std::string g_fixtures = MSPLIT_FIXTURE_DIR;
std::uint64_t g_seed = 20240611;

// Collects failed expectations for one criterion.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool passed() const { return !failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

SplitSystem load(const std::string& name) {
  return parse_document(read_file(g_fixtures + "/" + name)).system;
}

std::vector<std::string> parts(const ContainmentGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.part(v).str());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> forms(const RepresentationCensus& c) {
  std::set<std::string> out;
  for (const auto& k : c.iso_classes) out.insert(k.tree_form);
  return out;
}

std::set<std::string> forms(const OracleResult& r) {
  std::set<std::string> out;
  for (const auto& t : r.trees) out.insert(canonical_form(t));
  return out;
}

bool all_proper_subsets_compatible(const SubsetLattice& lattice) {
  const std::uint32_t top = (std::uint32_t{1} << lattice.split_count()) - 1;
  for (std::uint32_t m = 0; m < top; ++m) {
    if (!lattice.compatible(m)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void criterion1(Ledger& L) {
  {
    const SplitSystem s = load("pairwise-counterexample.txt");
    bool pairwise = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) pairwise &= pairwise_compatible(s[i], s[j]);
    }
    L.expect(pairwise, "pairwise counterexample: some pair not pairwise compatible");
    L.expect(!check_compatibility(s).compatible, "pairwise counterexample: reported compatible");
  }
  {
    const SplitSystem s = load("unique-tree.txt");
    const ContainmentGraph g(s);
    const auto r = check_compatibility(s);
    const auto c = census_representations(s);
    const auto o = oracle_compatible(s);
    L.expect(r.compatible, "unique-tree: not compatible");
    L.expect(c.thin_subgraph_count == 1 && c.unique, "unique-tree: census not 1 / unique");
    L.expect(o.trees.size() == 1 && r.representation &&
                 is_isomorphic(*r.representation, o.trees[0]),
             "unique-tree: representation differs from the unique brute-force tree");
    const TerminalReport t = terminal_report(g);
    L.expect(parts(g, t.terminal) == std::vector<std::string>{"a b", "a c", "c x"},
             "unique-tree: terminal sets differ from {ab, ac, cx}");
    L.expect(parts(g, t.superterminal) == std::vector<std::string>{"c x"},
             "unique-tree: superterminal sets differ from {cx}");
    if (r.representation) L.note("unique-tree tree " + canonical_form(*r.representation));
  }
  {
    const SplitSystem s = load("thin-incompatible.txt");
    L.expect(is_thin(s), "x^3yz example: not thin");
    L.expect(!check_compatibility(s).compatible, "x^3yz example: reported compatible");
  }
  {
    const SplitSystem s = load("four-trees.txt");
    const auto c = census_representations(s);
    const auto o = oracle_compatible(s);
    L.expect(c.thin_subgraph_count == 4, "four-trees: consistent thin subgraphs != 4");
    L.expect(c.iso_classes.size() == 4 && o.trees.size() == 4,
             "four-trees: representation count != 4 (engine or oracle)");
    L.expect(forms(c) == forms(o), "four-trees: census trees differ from oracle trees");
    L.expect(c.bijection_violations.empty(), "four-trees: bijection violated");
  }
  {
    const SplitSystem s = load("extra-leaf.txt");
    const ContainmentGraph g(s);
    L.expect(check_compatibility(s).compatible, "ab|abcd, abc|abd: not compatible");
    const auto terminal = parts(g, terminal_report(g).terminal);
    L.expect(terminal == std::vector<std::string>{"a b"}, "ab|abcd, abc|abd: terminal != {ab}");
    const auto o = oracle_compatible(s);
    L.expect(!o.trees.empty(), "ab|abcd, abc|abd: oracle found no tree");
    for (const auto& t : o.trees) {
      bool outside = false;
      for (auto leaf : t.leaves()) outside |= t.label(leaf).str() != "a b";
      L.expect(outside, "ab|abcd, abc|abd: a representation has all leaves in S_t");
    }
  }
  {
    const SplitSystem s = load("two-three-delta8.txt");
    const std::size_t d = delta(s.ground());
    L.expect(d == 8, "delta-8 2,3 system: delta != 8");
    L.expect(terminal_report(s).superterminal.empty(), "delta-8 2,3 system: superterminal set not empty");
    const SubsetLattice lattice(s);
    const std::uint32_t top = (std::uint32_t{1} << s.size()) - 1;
    L.expect(!lattice.compatible(top), "delta-8 2,3 system: reported compatible");
    L.expect(all_proper_subsets_compatible(lattice), "delta-8 2,3 system: a proper subset is incompatible");
    const std::size_t k = s.size();
    L.expect(k == 8 && d + 3 >= k, "delta-8 2,3 system: delta >= k-3 fails");
    const auto t = check_special_theorems(s, lattice, check_compatibility(s));
    L.expect(t.find("twothree")->applicable == 1 && t.find("twothree")->holds(),
             "delta-8 2,3 system: 2,3 proposition not applied or violated");
  }
}

void criterion2(Ledger& L) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::string tag = "tightness n=" + std::to_string(n) + ": ";
    const SplitSystem s = load("tightness-n" + std::to_string(n) + ".txt");
    const std::size_t d = delta(s.ground());
    L.expect(is_thin(s), tag + "not thin");
    L.expect(d == n - 2, tag + "delta != n-2");
    const SubsetLattice lattice(s);
    const std::uint32_t top = (std::uint32_t{1} << n) - 1;
    L.expect(!lattice.compatible(top), tag + "reported compatible");
    L.expect(all_proper_subsets_compatible(lattice), tag + "a proper subset is incompatible");
    const BoundReport b = bound_report(s, lattice);
    L.expect(b.minimal_incompatible_subsets.size() == 1 &&
                 b.minimal_incompatible_subsets[0].size() == d + 2,
             tag + "minimal incompatible size != delta+2");
    L.expect(b.star_holds, tag + "conjectured bound fails");
    bool small_ok = true;
    for (std::uint32_t m = 0; m <= top; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == d + 1) small_ok &= lattice.compatible(m);
    }
    L.expect(small_ok, tag + "a subset of size delta+1 is incompatible");
  }
}

struct UniverseCounts {
  std::size_t systems = 0;
  std::size_t compatible = 0;
  std::size_t representations = 0;
};

// Every orbit representative of criterion 3's universe.
void for_each_universe_system(
    const std::function<void(const SplitSystem&, const oracle::Catalogue*)>& visit,
    bool with_catalogue) {
  for (const Multiset& ground : ground_representatives(2, 6)) {
    const SplitUniverse u(ground);
    SystemFilter f;
    f.max_splits = 4;
    std::unique_ptr<oracle::Catalogue> cat;
    if (with_catalogue) cat = std::make_unique<oracle::Catalogue>(ground, 4);
    for (const auto& t : u.systems(f)) visit(u.make_system(t), cat.get());
  }
}

void criterion3(Ledger& L) {
  UniverseCounts n;
  for_each_universe_system(
      [&](const SplitSystem& s, const oracle::Catalogue* cat) {
        ++n.systems;
        const auto r = check_compatibility(s);
        const std::size_t reps = cat->representation_count(s);
        std::ostringstream who;
        who << s.ground().braced();
        for (const auto& x : s.splits()) who << " [" << x.str() << "]";
        L.expect(r.compatible == (reps > 0), "engine/oracle disagree on " + who.str());
        const auto c = census_representations(s);
        L.expect(c.iso_classes.size() == reps, "census/oracle counts disagree on " + who.str());
        if (reps > 0) {
          L.expect(forms(c) == *cat->representations(s), "census/oracle trees differ on " + who.str());
        }
        L.expect(c.bijection_violations.empty() && !c.truncated, "census incomplete on " + who.str());
        n.compatible += r.compatible;
        n.representations += reps;
      },
      true);
  L.note(std::to_string(n.systems) + " systems, " + std::to_string(n.compatible) +
         " compatible, " + std::to_string(n.representations) + " representations");
  L.expect(n.systems == 5548, "universe size changed");
}

void criterion4(Ledger& L) {
  std::size_t systems = 0, compatible = 0, duplicates = 0;
  for_each_universe_system(
      [&](const SplitSystem& s, const oracle::Catalogue*) {
        if (delta(s.ground()) != 0) return;
        ++systems;
        bool pairwise = true, distinct = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = i + 1; j < s.size(); ++j) {
            pairwise &= pairwise_compatible(s[i], s[j]);
            distinct &= !(s[i] == s[j]);
          }
        }
        const bool compat = check_compatibility(s).compatible;
        std::string who = s.ground().braced();
        for (const auto& x : s.splits()) who += " [" + x.str() + "]";
        if (distinct) {
          L.expect(compat == pairwise, "set ground, compatible != pairwise: " + who);
        } else {
          // A repeated split of a set is never representable.
          ++duplicates;
          L.expect(!compat, "set ground, repeated split reported compatible: " + who);
        }
        if (compat) {
          ++compatible;
          L.expect(census_representations(s).unique, "set ground, not unique: " + who);
        }
      },
      false);
  L.note(std::to_string(systems) + " set-ground systems (" + std::to_string(duplicates) +
         " with a repeated split), " + std::to_string(compatible) + " compatible");
}

void criterion5(Ledger& L) {
  std::size_t subgraphs = 0, trees = 0;
  for_each_universe_system(
      [&](const SplitSystem& s, const oracle::Catalogue*) {
        const ContainmentGraph g(s);
        std::string who = s.ground().braced();
        for (const auto& x : s.splits()) who += " [" + x.str() + "]";
        L.expect(verify::acyclic(g), "cycle in containment graph: " + who);
        L.expect(verify::complement_symmetric(g), "complement symmetry fails: " + who);
        for_each_consistent_thin_subgraph(g, [&](const ThinSubgraph& t) {
          ++subgraphs;
          L.expect(verify::arcs_determined_by_critical(t), "critical reconstruction fails: " + who);
          L.expect(verify::critical_transitive(t), "critical transitivity fails: " + who);
          const MTree tree = build_tree(t);
          ++trees;
          L.expect(verify::terminal_leaves(g, tree), "terminal set not a leaf label: " + who);
          return true;
        });
        const CheckRecord sup = check_supcore(s);
        L.expect(sup.holds(), "superterminal implication fails: " + who);
      },
      false);
  L.note(std::to_string(subgraphs) + " consistent thin subgraphs and " + std::to_string(trees) +
         " trees checked");
}

void scan_into(Ledger& L, const ScanBudget& b, const std::string& label,
               const std::vector<std::string>& required) {
  const ScanReport r = scan(b);
  for (const auto& c : r.checks) {
    for (const auto& v : c.violations) L.expect(false, label + " " + c.name + ": " + v);
  }
  for (const auto& name : required) {
    const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                                 [&](const CheckRecord& c) { return c.name == name; });
    L.expect(it != r.checks.end() && it->applicable > 0, label + ": " + name + " never applied");
  }
  L.expect(r.truncated == 0, label + ": truncated systems");
  std::ostringstream os;
  os << label << ": " << r.systems << " systems, " << r.violation_count() << " violations";
  for (const auto& name : required) {
    for (const auto& c : r.checks) {
      if (c.name == name) os << ", " << name << " x" << c.applicable;
    }
  }
  for (const auto& [kd, count] : r.open_question) {
    os << ", no superterminal at (k=" << kd.first << ", delta=" << kd.second << ") x" << count;
  }
  L.note(os.str());
}

void criterion6(Ledger& L) {
  ScanBudget universe;
  universe.max_delta = 2;
  universe.max_size = 6;
  universe.max_splits = 4;
  scan_into(L, universe, "universe", {"ref43", "star", "prdel", "equal", "twothreeholds"});

  ScanBudget equal = universe;
  equal.max_splits = 5;
  equal.equal_size = true;
  scan_into(L, equal, "equal-size n<=5", {"equal", "star"});

  ScanBudget two_three;
  two_three.max_delta = 3;
  two_three.max_size = 7;
  two_three.max_splits = 6;
  two_three.sizes = {2, 3};
  two_three.distinct = true;
  scan_into(L, two_three, "2,3 distinct", {"twothreeholds", "twothree", "ref43", "prdel"});
}

void criterion7(Ledger& L) {
  std::mt19937_64 rng(g_seed);
  std::size_t instances = 0;
  while (instances < 1000) {
    // Random multiset over up to 6 elements, multiplicities 1..4.
    const std::size_t elements = 1 + rng() % 6;
    std::vector<std::string> pool;
    for (std::size_t e = 0; e < elements; ++e) {
      const std::size_t m = 1 + rng() % 4;
      for (std::size_t c = 0; c < m; ++c) pool.push_back(std::string(1, static_cast<char>('a' + e)));
    }
    if (pool.size() < 2) continue;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = 2 + rng() % (pool.size() - 1);
    std::vector<std::vector<Multiset::Entry>> buckets(k);
    for (std::size_t t = 0; t < pool.size(); ++t) buckets[t < k ? t : rng() % k].emplace_back(pool[t], 1);
    std::vector<Multiset> partition;
    for (auto& b : buckets) partition.emplace_back(b);
    // Every valid edge, or a random subset of them.
    const bool maximal = rng() % 2 == 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        bool shared = false;
        for (const auto& [name, m] : partition[i].entries()) shared |= partition[j].count(name) > 0;
        if (shared && (maximal || rng() % 2 == 0)) edges.emplace_back(i, j);
      }
    }
    const IntersectionBound r = intersection_graph_bound(partition, edges);
    L.expect(r.holds, "delta " + std::to_string(r.delta) + " < k - c = " +
                          std::to_string(r.parts) + " - " + std::to_string(r.components));
    ++instances;
  }
  L.note("1000 instances, seed " + std::to_string(g_seed));
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      g_seed = std::stoull(arg.substr(7));
    } else if (arg.rfind("--fixtures=", 0) == 0) {
      g_fixtures = arg.substr(11);
    } else {
      std::cerr << "usage: msplit_acceptance [--seed=N] [--fixtures=DIR]\n";
      return 2;
    }
  }
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Ledger&);
  };
  const Criterion criteria[] = {
      {1, "worked-example fixtures", criterion1},
      {2, "tightness family n = 3, 4, 5", criterion2},
      {3, "engine and census agree with the oracle on the small universe", criterion3},
      {4, "set grounds: compatible iff pairwise compatible, unique representation", criterion4},
      {5, "lemma suites on the small universe", criterion5},
      {6, "bound suites and targeted 2,3-split scans", criterion6},
      {7, "intersection-graph bound on 1000 random instances", criterion7},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Ledger L;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(L);
    } catch (const std::exception& e) {
      L.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (L.passed() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
              << " (" << L.checks() << " checks, " << secs << " s)\n";
    for (const auto& n : L.notes()) std::cout << "      " << n << '\n';
    for (const auto& f : L.failures()) std::cout << "      failed: " << f << '\n';
    all &= L.passed();
  }
  return all ? 0 : 1;
}
