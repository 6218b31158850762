#include "msplit/scan.hpp"

#include <algorithm>
#include <chrono>
#include <omp.h>

namespace msplit {

namespace {

// Terminal parts recomputed from the multisets alone: no part of another
// split lies strictly inside.
CheckRecord terminal_by_definition(const SplitSystem& system, const TerminalReport& report) {
  CheckRecord rec("terminal-degree");
  const ContainmentGraph g(system);
  ++rec.applicable;
  std::vector<int> direct;
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (Side side : {Side::kSmall, Side::kLarge}) {
      const Multiset& a = system[i].part(side);
      bool terminal = true;
      for (std::size_t j = 0; j < system.size() && terminal; ++j) {
        if (j == i) continue;
        terminal = !is_proper_submultiset(system[j].small(), a) &&
                   !is_proper_submultiset(system[j].large(), a);
      }
      if (terminal) direct.push_back(ContainmentGraph::vertex_of(i, side));
    }
  }
  if (direct != report.terminal) {
    rec.violations.push_back("terminal parts disagree with the degree count; ground " +
                             system.ground().braced());
  }
  return rec;
}

SystemFilter filter_of(const ScanBudget& b) {
  SystemFilter f;
  f.min_splits = 1;
  f.max_splits = b.max_splits;
  f.sizes = b.sizes;
  f.equal_size = b.equal_size;
  f.distinct = b.distinct;
  return f;
}

void merge(ScanReport& r, const SystemTally& t) {
  ++r.systems;
  (t.compatible ? r.compatible : r.incompatible) += 1;
  r.thin += t.thin;
  r.equal_size += t.equal_size;
  r.two_three_distinct += t.two_three_distinct;
  r.truncated += t.truncated;
  r.engine_calls += t.engine_calls;
  r.superterminal_mismatches += t.superterminal_mismatches;
  for (const auto& c : t.checks) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const CheckRecord& x) { return x.name == c.name; });
    if (it == r.checks.end()) {
      r.checks.emplace_back(c.name);
      it = std::prev(r.checks.end());
    }
    it->applicable += c.applicable;
    it->violations.insert(it->violations.end(), c.violations.begin(), c.violations.end());
  }
  for (const auto& kd : t.open_question) ++r.open_question[kd];
}

template <class Systems, class Tally>
ScanReport run(const ScanBudget& budget, Systems&& systems_of, Tally&& tally_all) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport r;
  r.budget = budget;
  for (const Multiset& ground : ground_representatives(budget.max_delta, budget.max_size,
                                                       budget.min_size)) {
    ++r.grounds;
    const SplitUniverse universe(ground);
    const auto tuples = systems_of(universe, filter_of(budget));
    for (const auto& t : tally_all(universe, tuples)) merge(r, t);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

SystemTally tally_system(const SplitSystem& system, const LatticeLimits& limits) {
  SystemTally t;
  const ContainmentGraph g(system);
  const SubsetLattice lattice(system, limits);
  const CompatibilityResult compat = check_compatibility(system, limits.search);
  t.compatible = compat.compatible;
  t.thin = is_thin(g);
  t.truncated = lattice.truncated() || compat.truncated;
  t.engine_calls = lattice.engine_calls() + 1;
  std::vector<std::size_t> sizes;
  for (const auto& s : system.splits()) sizes.push_back(split_size(s));
  t.equal_size = std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == sizes[0]; });
  bool distinct = true;
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) distinct &= !(system[i] == system[j]);
  }
  t.two_three_distinct =
      distinct && std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s == 2 || s == 3; });
  TheoremReport theorems = check_special_theorems(system, lattice, compat);
  t.superterminal_mismatches = theorems.superterminal_mismatches;
  t.open_question = std::move(theorems.open_question);
  t.checks = std::move(theorems.checks);
  t.checks.push_back(terminal_by_definition(system, terminal_report(g)));
  return t;
}

std::size_t ScanReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations.size();
  return total;
}

bool ScanReport::same_results(const ScanReport& o) const {
  auto key = [](const ScanReport& r) {
    return std::tie(r.grounds, r.systems, r.compatible, r.incompatible, r.thin, r.equal_size,
                    r.two_three_distinct, r.truncated, r.engine_calls,
                    r.superterminal_mismatches, r.open_question);
  };
  if (key(*this) != key(o) || checks.size() != o.checks.size()) return false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].name != o.checks[i].name || checks[i].applicable != o.checks[i].applicable ||
        checks[i].violations != o.checks[i].violations) {
      return false;
    }
  }
  return true;
}

ScanReport scan_serial(const ScanBudget& budget) {
  return run(
      budget,
      [](const SplitUniverse& u, const SystemFilter& f) { return u.systems_serial(f); },
      [&](const SplitUniverse& u, const std::vector<std::vector<std::uint32_t>>& tuples) {
        std::vector<SystemTally> out;
        out.reserve(tuples.size());
        for (const auto& t : tuples) out.push_back(tally_system(u.make_system(t), budget.lattice));
        return out;
      });
}

ScanReport scan(const ScanBudget& budget) {
  const int threads = budget.jobs > 0 ? budget.jobs : omp_get_max_threads();
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads);
  ScanReport r = run(
      budget,
      [](const SplitUniverse& u, const SystemFilter& f) { return u.systems(f); },
      [&](const SplitUniverse& u, const std::vector<std::vector<std::uint32_t>>& tuples) {
        std::vector<SystemTally> out(tuples.size());
        const auto count = static_cast<long long>(tuples.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (long long k = 0; k < count; ++k) {
          out[k] = tally_system(u.make_system(tuples[k]), budget.lattice);
        }
        return out;
      });
  omp_set_num_threads(saved);
  r.threads = threads;
  return r;
}

}  // namespace msplit
