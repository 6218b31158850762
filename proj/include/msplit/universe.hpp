#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "msplit/counts.hpp"
#include "msplit/split.hpp"

namespace msplit {

// One ground per multiplicity profile: sizes in [min_size, max_size] and
// delta <= max_delta, elements named a, b, c, ... in descending multiplicity.
std::vector<Multiset> ground_representatives(std::size_t max_delta, std::size_t max_size,
                                             std::size_t min_size = 2);

struct SystemFilter {
  std::size_t min_splits = 1;
  std::size_t max_splits = 4;
  // Allowed split sizes; empty means any.
  std::vector<std::size_t> sizes;
  bool equal_size = false;
  // No split repeated.
  bool distinct = false;
};

// All splits of one ground plus the action of the multiplicity-preserving
// element permutations on them. Systems are index tuples into splits().
class SplitUniverse {
 public:
  explicit SplitUniverse(Multiset ground);

  const Multiset& ground() const { return ground_; }
  const std::vector<Split>& splits() const { return splits_; }
  std::size_t permutation_count() const { return action_.size(); }

  // Orbit representatives: the sorted tuple that is lexicographically least
  // among its images. Prefixes of such tuples are representatives too, which
  // lets generation prune.
  std::vector<std::vector<std::uint32_t>> systems(const SystemFilter& filter) const;
  std::vector<std::vector<std::uint32_t>> systems_serial(const SystemFilter& filter) const;
  bool is_orbit_minimal(const std::vector<std::uint32_t>& sorted) const;

  SplitSystem make_system(const std::vector<std::uint32_t>& indices) const;

 private:
  void extend(std::vector<std::uint32_t>& prefix, const SystemFilter& filter,
              const std::vector<bool>& allowed,
              std::vector<std::vector<std::uint32_t>>& out) const;

  Multiset ground_;
  std::vector<Split> splits_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::uint32_t>> action_;  // [perm][split] -> split
};

}  // namespace msplit
