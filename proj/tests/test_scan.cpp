#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "msplit/scan.hpp"
#include "msplit/universe.hpp"
#include "support.hpp"

using namespace msplit;

namespace {

// Orbit count by brute force: rename elements through every
// multiplicity-preserving bijection and keep the least sorted image.
std::size_t orbits_by_renaming(const SplitUniverse& u, std::size_t max_splits) {
  const Multiset& g = u.ground();
  std::vector<std::string> names;
  for (const auto& [n, m] : g.entries()) names.push_back(n);
  std::vector<std::map<std::string, std::string>> renamings;
  std::vector<std::string> perm = names;
  do {
    bool keeps = true;
    for (std::size_t k = 0; k < names.size(); ++k) keeps &= g.count(names[k]) == g.count(perm[k]);
    if (!keeps) continue;
    std::map<std::string, std::string> r;
    for (std::size_t k = 0; k < names.size(); ++k) r[names[k]] = perm[k];
    renamings.push_back(r);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto rename = [&](const Split& s, const std::map<std::string, std::string>& r) {
    std::vector<Multiset::Entry> e;
    for (const auto& [n, m] : s.small().entries()) e.emplace_back(r.at(n), m);
    return Split::from_part(Multiset(e), g);
  };
  std::set<std::vector<Split>> seen;
  std::vector<std::vector<std::size_t>> frontier{{}};
  const auto& all = u.splits();
  for (std::size_t n = 1; n <= max_splits; ++n) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : frontier) {
      for (std::size_t s = t.empty() ? 0 : t.back(); s < all.size(); ++s) {
        auto ext = t;
        ext.push_back(s);
        next.push_back(ext);
        std::vector<Split> best;
        for (const auto& r : renamings) {
          std::vector<Split> img;
          for (auto i : ext) img.push_back(rename(all[i], r));
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) best = img;
        }
        seen.insert(best);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_SUITE("scan") {

TEST_CASE("ground representatives") {
  std::vector<std::string> got;
  for (const auto& g : ground_representatives(1, 4)) got.push_back(g.str());
  CHECK(got == std::vector<std::string>{"a b", "a^2", "a b c", "a^2 b", "a b c d", "a^2 b c"});
  CHECK(ground_representatives(0, 3, 3).size() == 1);
}

TEST_CASE("split universe of a small multiset") {
  const SplitUniverse u(Multiset::parse("a^2 b c"));
  CHECK(u.splits().size() == 5);
  CHECK(u.permutation_count() == 2);
  CHECK(std::is_sorted(u.splits().begin(), u.splits().end()));
  CHECK(SplitUniverse(Multiset::parse("a b c d")).splits().size() == 7);
  CHECK(SplitUniverse(Multiset::parse("a^2 b^2")).splits().size() == 4);
}

TEST_CASE("orbit representatives match brute-force renaming") {
  for (const char* ground : {"a b c d", "a^2 b c", "a^2 b^2", "a b c d e", "a^2 b^2 c"}) {
    CAPTURE(ground);
    const SplitUniverse u(Multiset::parse(ground));
    SystemFilter f;
    f.max_splits = 3;
    const auto reps = u.systems(f);
    CHECK(reps.size() == orbits_by_renaming(u, 3));
    CHECK(reps == u.systems_serial(f));
    for (const auto& r : reps) CHECK(u.is_orbit_minimal(r));
  }
}

TEST_CASE("filters") {
  const SplitUniverse u(Multiset::parse("a b c d e"));
  SystemFilter f;
  f.max_splits = 3;
  f.sizes = {2};
  f.distinct = true;
  for (const auto& t : u.systems(f)) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      CHECK(split_size(u.splits()[t[k]]) == 2);
      if (k) CHECK(t[k - 1] < t[k]);
    }
  }
  SystemFilter eq;
  eq.max_splits = 3;
  eq.equal_size = true;
  for (const auto& t : u.systems(eq)) {
    for (auto s : t) CHECK(split_size(u.splits()[s]) == split_size(u.splits()[t[0]]));
  }
  eq.min_splits = 3;
  for (const auto& t : u.systems(eq)) CHECK(t.size() == 3);
}

TEST_CASE("small exhaustive scan has no violations") {
  ScanBudget b;
  b.max_delta = 1;
  b.max_size = 5;
  b.max_splits = 3;
  const ScanReport r = scan(b);
  CHECK(r.systems == 210);
  CHECK(r.violation_count() == 0);
  CHECK(r.truncated == 0);
}

TEST_CASE("parallel scan equals the serial reference") {
  ScanBudget b;
  b.max_delta = 2;
  b.max_size = 5;
  b.max_splits = 4;
  b.jobs = 3;
  const ScanReport par = scan(b);
  const ScanReport ser = scan_serial(b);
  CHECK(par.same_results(ser));
  CHECK(par.threads == 3);
  CHECK(par.systems > 0);
}

TEST_CASE("on sets every incompatible system has an incompatible pair") {
  ScanBudget b;
  b.max_delta = 0;
  b.max_size = 6;
  b.max_splits = 4;
  b.distinct = true;
  const ScanReport r = scan(b);
  CHECK(r.violation_count() == 0);
  CHECK(r.open_question.empty());
  // star with delta 0: every minimal incompatible subset has at most 2 splits.
  for (const auto& c : r.checks) {
    if (c.name == "star") CHECK(c.applicable == r.systems);
  }
}

TEST_CASE("equal-size scan") {
  ScanBudget b;
  b.max_delta = 2;
  b.max_size = 6;
  b.max_splits = 4;
  b.equal_size = true;
  const ScanReport r = scan(b);
  CHECK(r.equal_size == r.systems);
  CHECK(r.violation_count() == 0);
}

TEST_CASE("tally of one system") {
  const SystemTally t = tally_system(test::sys("a^2 b c d", {"a b", "a c", "a d"}), {});
  CHECK_FALSE(t.compatible);
  CHECK(t.thin);
  CHECK(t.two_three_distinct);
  CHECK(t.open_question.empty());
}

}  // TEST_SUITE
