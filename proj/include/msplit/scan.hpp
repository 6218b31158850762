#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msplit/structure.hpp"
#include "msplit/universe.hpp"

namespace msplit {

struct ScanBudget {
  std::size_t max_delta = 1;
  std::size_t max_size = 5;
  std::size_t min_size = 2;
  std::size_t max_splits = 3;
  std::vector<std::size_t> sizes;
  bool equal_size = false;
  bool distinct = false;
  // OpenMP threads for the parallel scan; 0 keeps the runtime default.
  int jobs = 0;
  LatticeLimits lattice;
};

struct ScanReport {
  ScanBudget budget;
  std::size_t grounds = 0;
  std::size_t systems = 0;
  std::size_t compatible = 0;
  std::size_t incompatible = 0;
  std::size_t thin = 0;
  std::size_t equal_size = 0;
  std::size_t two_three_distinct = 0;
  std::size_t truncated = 0;
  std::size_t engine_calls = 0;
  std::size_t superterminal_mismatches = 0;
  // Statement name -> aggregated record, in a fixed order.
  std::vector<CheckRecord> checks;
  // (k, delta) -> number of minimal incompatible subsets without
  // superterminal parts.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> open_question;
  double seconds = 0;
  int threads = 1;

  std::size_t violation_count() const;
  // Everything except timing and thread count.
  bool same_results(const ScanReport& other) const;
};

ScanReport scan(const ScanBudget& budget);
ScanReport scan_serial(const ScanBudget& budget);

// The per-system part of a scan, exposed for tests.
struct SystemTally {
  bool compatible = false;
  bool thin = false;
  bool equal_size = false;
  bool two_three_distinct = false;
  bool truncated = false;
  std::size_t engine_calls = 0;
  std::size_t superterminal_mismatches = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::size_t, std::size_t>> open_question;
};
SystemTally tally_system(const SplitSystem& system, const LatticeLimits& limits);

}  // namespace msplit
