#include <doctest.h>

#include <atomic>
#include <set>

#include "msplit/compat_engine.hpp"
#include "msplit/errors.hpp"
#include "msplit/oracle.hpp"
#include "msplit/universe.hpp"
#include "support.hpp"

using namespace msplit;

TEST_SUITE("oracle") {

TEST_CASE("unlabelled tree counts") {
  // Unlabelled trees on 1..8 vertices.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t v = 1; v <= 8; ++v) CHECK(oracle::tree_shapes(v).size() == expected[v - 1]);
  for (const auto& s : oracle::tree_shapes(6)) CHECK(s.edges.size() == 5);
}

TEST_CASE("pair from the pairwise counterexample is a path") {
  const auto r = oracle_compatible(test::sys("a^2 b c d", {"a b", "a c"}));
  REQUIRE(r.compatible);
  REQUIRE(r.trees.size() == 1);
  CHECK(canonical_form(r.trees[0]) == "({d}: ({a,b}), ({a,c}))");
}

TEST_CASE("duplicate split") {
  CHECK_FALSE(oracle_compatible(test::sys("a b c d", {"a b", "a b"})).compatible);
  // On a multiset a duplicate can be representable: a - b - a.
  const auto r = oracle_compatible(test::sys("a^2 b", {"a", "a"}));
  REQUIRE(r.compatible);
  CHECK(canonical_form(r.trees[0]) == "({b}: ({a}), ({a}))");
}

TEST_CASE("Buneman uniqueness on a set") {
  const auto r = oracle_compatible(test::sys("a b c", {"a", "a b"}));
  CHECK(r.compatible);
  CHECK(r.trees.size() == 1);
}

TEST_CASE("four-tree system has four representations") {
  CHECK(oracle_compatible(test::sys("a^2 b^2 c d", {"a", "a b c", "b"})).trees.size() == 4);
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(oracle_compatible(test::sys("a b c d e f", {"a", "b", "c", "d", "e"})),
                  BudgetExceeded);
  CHECK_THROWS_AS(oracle_compatible(test::sys("a b c d e f g h i", {"a"})), BudgetExceeded);
  OracleBudget wide;
  wide.max_splits = 5;
  CHECK_NOTHROW(oracle_compatible(test::sys("a b c d e f", {"a", "b", "c", "d", "e"}), wide));
}

TEST_CASE("parallel and serial labellings agree") {
  const Multiset g = Multiset::parse("a^2 b c d");
  for (std::size_t edges = 0; edges <= 3; ++edges) {
    std::atomic<std::size_t> par{0};
    std::size_t ser = 0;
    std::set<std::vector<Counts>> a, b;
    oracle::for_each_labeling(g, edges, [&](int, const oracle::Shape&, const std::vector<Counts>&) { ++par; });
    oracle::for_each_labeling_serial(g, edges, [&](int w, const oracle::Shape&, const std::vector<Counts>&) {
      CHECK(w == 0);
      ++ser;
    });
    CHECK(par.load() == ser);
  }
}

TEST_CASE("catalogue matches per-system oracle") {
  const Multiset g = Multiset::parse("a^2 b c d");
  const oracle::Catalogue cat(g, 3);
  const SplitUniverse u(g);
  SystemFilter f;
  f.max_splits = 3;
  for (const auto& t : u.systems(f)) {
    const SplitSystem s = u.make_system(t);
    CHECK(cat.representation_count(s) == oracle_compatible(s).trees.size());
  }
}

}  // TEST_SUITE
