#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "msplit/multiset.hpp"

namespace msplit {

enum class Side : std::uint8_t { kSmall = 0, kLarge = 1 };

// An unordered bipartition A|B of a ground multiset with both parts nonempty.
//
// Stored in canonical orientation: `small` has fewer elements, ties broken by
// the smaller canonical form. A self-complementary split has small == large.
class Split {
 public:
  // A|(ground - A).
  static Split from_part(const Multiset& part, const Multiset& ground);
  // lhs|rhs; lhs + rhs must equal ground exactly.
  static Split from_sides(const Multiset& lhs, const Multiset& rhs,
                          const Multiset& ground);

  const Multiset& ground() const { return ground_; }
  const Multiset& small() const { return small_; }
  const Multiset& large() const { return large_; }
  const Multiset& part(Side side) const {
    return side == Side::kSmall ? small_ : large_;
  }

  // "a b | a b c^2 x y"
  std::string str() const;

  friend bool operator==(const Split&, const Split&) = default;
  friend std::strong_ordering operator<=>(const Split&, const Split&) = default;

 private:
  Split(Multiset ground, Multiset small, Multiset large)
      : ground_(std::move(ground)), small_(std::move(small)), large_(std::move(large)) {}

  Multiset ground_;
  Multiset small_;
  Multiset large_;
};

// Sum-fits reading of "some part of s1 and some part of s2 are disjoint":
// there are parts A of s1 and B of s2 with A + B ⊆ ground.
bool pairwise_compatible(const Split& s1, const Split& s2);

// Number of elements in the smaller part.
std::size_t split_size(const Split& s);

// An indexed sequence of splits over one ground. Duplicates are kept as
// distinct entries; indices are 0-based internally and printed 1-based.
class SplitSystem {
 public:
  SplitSystem() = default;
  explicit SplitSystem(Multiset ground) : ground_(std::move(ground)) {}
  SplitSystem(Multiset ground, std::vector<Split> splits);

  const Multiset& ground() const { return ground_; }
  const std::vector<Split>& splits() const { return splits_; }
  std::size_t size() const { return splits_.size(); }
  bool empty() const { return splits_.empty(); }
  const Split& operator[](std::size_t i) const { return splits_[i]; }

  void add(Split s);

  // The subsystem made of the listed indices, in the given order.
  SplitSystem subsystem(const std::vector<std::size_t>& indices) const;

  // Splits as a sorted multiset, for order-insensitive comparison.
  std::vector<Split> sorted_splits() const;

  friend bool operator==(const SplitSystem&, const SplitSystem&) = default;

 private:
  Multiset ground_;
  std::vector<Split> splits_;
};

}  // namespace msplit
