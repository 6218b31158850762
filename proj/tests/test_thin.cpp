#include <doctest.h>

#include "msplit/errors.hpp"
#include "msplit/thin_subgraph.hpp"
#include "msplit/universe.hpp"
#include "support.hpp"

using namespace msplit;

namespace {

std::vector<ThinSubgraph> pruned(const ContainmentGraph& g) {
  std::vector<ThinSubgraph> out;
  for_each_consistent_thin_subgraph(g, [&](const ThinSubgraph& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("thin") {

TEST_CASE("figure 3: four thin subgraphs, all consistent") {
  const ContainmentGraph g(test::sys("a^2 b^2 c d", {"a", "a b c", "b"}));
  CHECK(thin_subgraph_count(g) == 4);
  std::size_t all = 0;
  CHECK(for_each_thin_subgraph(g, [&](const ThinSubgraph&) { return ++all, true; }) ==
        SearchOutcome::kExhausted);
  CHECK(all == 4);
  CHECK(pruned(g).size() == 4);
}

TEST_CASE("a thin incompatible system has one inconsistent thin subgraph") {
  const ContainmentGraph g(test::sys("a^2 b c d", {"a b", "a c", "a d"}));
  CHECK(thin_subgraph_count(g) == 1);
  std::vector<ThinSubgraph> all;
  for_each_thin_subgraph(g, [&](const ThinSubgraph& t) { return all.push_back(t), true; });
  REQUIRE(all.size() == 1);
  CHECK_FALSE(all[0].consistent());
  // Thin: every arc of Γ is chosen. ab -> abd is bypassed by nothing.
  CHECK(all[0].arcs() == g.arcs());
  CHECK(all[0].is_critical(0, 3));
  CHECK(pruned(g).empty());
}

TEST_CASE("a NoEdges pair blocks every selection") {
  const ContainmentGraph g(test::sys("a b c d", {"a b", "a c"}));
  CHECK(thin_subgraph_count(g) == 0);
  CHECK(thin_layout(g).blocked);
  CHECK(pruned(g).empty());
}

TEST_CASE("visitor can stop and the node budget truncates") {
  const ContainmentGraph g(test::sys("a^2 b^2 c d", {"a", "a b c", "b"}));
  std::size_t seen = 0;
  CHECK(for_each_consistent_thin_subgraph(g, [&](const ThinSubgraph&) { return ++seen, false; }) ==
        SearchOutcome::kStopped);
  CHECK(seen == 1);
  SearchLimits tiny;
  tiny.max_nodes = 1;
  CHECK(for_each_consistent_thin_subgraph(g, [](const ThinSubgraph&) { return true; }, tiny) ==
        SearchOutcome::kTruncated);
}

TEST_CASE("malformed selections are rejected") {
  const ContainmentGraph g(test::sys("a^2 b^2 c d", {"a", "a b c", "b"}));
  std::vector<VertexMask> none(g.vertex_count(), 0);
  CHECK_THROWS_AS(ThinSubgraph(g, none), ContractError);
  std::vector<VertexMask> wrong(g.vertex_count(), 0);
  wrong[1] = ContainmentGraph::bit(0);  // not an arc of Γ
  CHECK_THROWS_AS(ThinSubgraph(g, wrong), ContractError);
}

TEST_CASE("pruned search equals the brute-force reference") {
  std::size_t systems = 0, subgraphs = 0;
  for (const Multiset& ground : ground_representatives(2, 6)) {
    const SplitUniverse u(ground);
    SystemFilter f;
    f.max_splits = 4;
    for (const auto& t : u.systems(f)) {
      const ContainmentGraph g(u.make_system(t));
      const auto fast = pruned(g);
      const auto slow = reference::consistent_thin_subgraphs(g);
      CHECK(fast == slow);
      for (const auto& s : fast) CHECK(s.consistent());
      ++systems;
      subgraphs += fast.size();
    }
  }
  CHECK(systems == 5548);
  MESSAGE("consistent thin subgraphs: " << subgraphs);
}

}  // TEST_SUITE
