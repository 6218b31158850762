#include "msplit/split.hpp"

#include <algorithm>

#include "msplit/errors.hpp"

namespace msplit {

Split Split::from_part(const Multiset& part, const Multiset& ground) {
  Multiset rest = complement(part, ground);
  return from_sides(part, rest, ground);
}

Split Split::from_sides(const Multiset& lhs, const Multiset& rhs,
                        const Multiset& ground) {
  if (lhs.empty() || rhs.empty()) {
    throw InputError("split parts must be nonempty: " + lhs.braced() + "|" +
                     rhs.braced());
  }
  if (lhs + rhs != ground) {
    throw InputError("split " + lhs.braced() + "|" + rhs.braced() +
                     " does not sum to the ground " + ground.braced());
  }
  bool lhs_small = lhs.size() != rhs.size() ? lhs.size() < rhs.size() : lhs <= rhs;
  return lhs_small ? Split(ground, lhs, rhs) : Split(ground, rhs, lhs);
}

std::string Split::str() const { return small_.str() + " | " + large_.str(); }

bool pairwise_compatible(const Split& s1, const Split& s2) {
  if (s1.ground() != s2.ground()) {
    throw InputError("splits are over different grounds");
  }
  for (Side a : {Side::kSmall, Side::kLarge}) {
    for (Side b : {Side::kSmall, Side::kLarge}) {
      if (is_submultiset(s1.part(a) + s2.part(b), s1.ground())) return true;
    }
  }
  return false;
}

std::size_t split_size(const Split& s) { return s.small().size(); }

SplitSystem::SplitSystem(Multiset ground, std::vector<Split> splits)
    : ground_(std::move(ground)) {
  splits_.reserve(splits.size());
  for (auto& s : splits) add(std::move(s));
}

void SplitSystem::add(Split s) {
  if (s.ground() != ground_) {
    throw InputError("split " + s.str() + " is not over the system ground " +
                     ground_.braced());
  }
  splits_.push_back(std::move(s));
}

SplitSystem SplitSystem::subsystem(const std::vector<std::size_t>& indices) const {
  SplitSystem out(ground_);
  out.splits_.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= splits_.size()) {
      throw InputError("split index " + std::to_string(i + 1) + " out of range");
    }
    out.splits_.push_back(splits_[i]);
  }
  return out;
}

std::vector<Split> SplitSystem::sorted_splits() const {
  std::vector<Split> out = splits_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace msplit
