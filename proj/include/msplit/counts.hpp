#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msplit/multiset.hpp"

namespace msplit {

// Dense multiplicity vector over a fixed ground: entry k is the multiplicity
// of the k-th element of ground.entries().
using Counts = std::vector<std::uint16_t>;

// Throws InputError if `m` has an element outside `ground`.
Counts to_counts(const Multiset& m, const Multiset& ground);
Multiset from_counts(const Counts& c, const Multiset& ground);

inline bool counts_leq(const Counts& a, const Counts& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline std::size_t counts_total(const Counts& c) {
  std::size_t t = 0;
  for (auto x : c) t += x;
  return t;
}

}  // namespace msplit
