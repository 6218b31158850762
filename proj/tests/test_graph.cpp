#include <doctest.h>

#include "msplit/containment_graph.hpp"
#include "msplit/errors.hpp"
#include "msplit/structure.hpp"
#include "msplit/universe.hpp"
#include "support.hpp"

using namespace msplit;

namespace {

// Arcs straight from the definition, on multisets.
bool arcs_match_definition(const ContainmentGraph& g) {
  const int nv = static_cast<int>(g.vertex_count());
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      const bool expected = ContainmentGraph::split_of(u) != ContainmentGraph::split_of(v) &&
                            is_proper_submultiset(g.part(u), g.part(v));
      if (g.has_arc(u, v) != expected) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("vertex numbering and labels") {
  const ContainmentGraph g(test::sys("a^2 b c d", {"a b", "a c", "a d"}));
  CHECK(g.vertex_count() == 6);
  CHECK(ContainmentGraph::vertex_of(1, Side::kLarge) == 3);
  CHECK(ContainmentGraph::split_of(3) == 1);
  CHECK(ContainmentGraph::mate(4) == 5);
  CHECK(g.part(2) == Multiset::parse("a c"));
  CHECK(g.vertex_label(0) == "{a,b} / S1");
  CHECK(g.vertex_label(1) == "{a,c,d} / S1");
}

TEST_CASE("pairwise counterexample: every pair is D1") {
  const ContainmentGraph g(test::sys("a^2 b c d", {"a b", "a c", "a d"}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(g.classify_pair(i, j) == PairClass::kD1);
    }
  }
  // ab -> abd and its partner ac -> acd.
  CHECK(g.arcs_between(0, 1) == std::vector<Arc>{{0, 3}});
  CHECK(g.arcs_between(1, 0) == std::vector<Arc>{{2, 1}});
  CHECK(is_thin(g));
  CHECK_THROWS_AS(g.classify_pair(1, 1), InputError);
}

TEST_CASE("thin example on x^3 y z") {
  CHECK(is_thin(test::sys("x^3 y z", {"x^2", "x y", "x z"})));
}

TEST_CASE("four-tree system has two D2 pairs") {
  const ContainmentGraph g(test::sys("a^2 b^2 c d", {"a", "a b c", "b"}));
  CHECK(g.classify_pair(0, 1) == PairClass::kD2);
  CHECK(g.classify_pair(2, 1) == PairClass::kD2);
  CHECK(g.classify_pair(0, 2) == PairClass::kD1);
  CHECK_FALSE(is_thin(g));
  CHECK(to_string(PairClass::kD2) == "D2");
}

TEST_CASE("incompatible pair on a set has no edges") {
  const ContainmentGraph g(test::sys("a b c d", {"a b", "a c"}));
  CHECK(g.classify_pair(0, 1) == PairClass::kNoEdges);
  CHECK(g.arc_count() == 0);
  CHECK_FALSE(is_thin(g));
}

TEST_CASE("duplicate splits") {
  // A|B against itself: A ⊊ B only when A is strictly smaller.
  const ContainmentGraph g(test::sys("a^2 b", {"a", "a"}));
  CHECK(g.has_arc(0, 3));
  CHECK(g.has_arc(2, 1));
  CHECK(g.arc_count() == 2);
  const ContainmentGraph self(test::sys("a^2", {"a", "a"}));
  CHECK(self.arc_count() == 0);
}

TEST_CASE("more than 32 splits is refused") {
  SplitSystem s(Multiset::parse("a b c"));
  for (int k = 0; k < 33; ++k) s.add(test::sys("a b c", {"a"})[0]);
  CHECK_THROWS_AS(ContainmentGraph{s}, InputError);
}

TEST_CASE("arcs, order, acyclicity and symmetry over a small universe") {
  std::size_t systems = 0;
  for (const Multiset& ground : ground_representatives(2, 5)) {
    const SplitUniverse u(ground);
    SystemFilter f;
    f.max_splits = 3;
    for (const auto& t : u.systems(f)) {
      const ContainmentGraph g(u.make_system(t));
      ++systems;
      CHECK(arcs_match_definition(g));
      CHECK(verify::acyclic(g));
      CHECK(verify::complement_symmetric(g));
      std::vector<int> pos(g.vertex_count());
      const auto& order = g.topological_order();
      for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
      for (const auto& a : g.arcs()) CHECK(pos[a.from] < pos[a.to]);
      for (std::size_t i = 0; i < g.split_count(); ++i) {
        for (std::size_t j = 0; j < g.split_count(); ++j) {
          if (i == j) continue;
          const auto n = g.arcs_between(i, j).size();
          CHECK(n <= 2);
          CHECK(g.arcs_between(j, i).size() == n);
        }
      }
    }
  }
  CHECK(systems == 419);
}

}  // TEST_SUITE
