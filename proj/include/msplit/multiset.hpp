#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msplit {

// A finite multiset over opaque string tokens.
//
// Entries are kept sorted by name (bytewise) with every multiplicity >= 1, so
// the entry list is a canonical form: two multisets are equal iff their entry
// lists are identical. Ordering compares entry lists lexicographically.
class Multiset {
 public:
  using Entry = std::pair<std::string, std::size_t>;

  Multiset() = default;
  Multiset(std::initializer_list<Entry> entries);
  explicit Multiset(std::vector<Entry> entries);

  // Parses the literal grammar `name(^k)?` separated by whitespace, e.g.
  // "a^2 b c". Repeated names accumulate. Throws InputError.
  static Multiset parse(std::string_view text);

  std::size_t count(std::string_view name) const;
  std::size_t size() const { return total_; }
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // "a^2 b" (empty multiset prints as "").
  std::string str() const;
  // "{a^2,b}" (empty multiset prints as "{}").
  std::string braced() const;

  Multiset& operator+=(const Multiset& other);
  friend Multiset operator+(Multiset lhs, const Multiset& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  void normalize();

  std::vector<Entry> entries_;
  std::size_t total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Multiset& m);

// True iff `name` is a legal element token.
bool is_element_name(std::string_view name);

// Total excess multiplicity: sum over elements of (multiplicity - 1).
std::size_t delta(const Multiset& m);

bool is_submultiset(const Multiset& a, const Multiset& b);
bool is_proper_submultiset(const Multiset& a, const Multiset& b);

// Elements of `a` whose multiplicity in `ground` is exactly one.
// Requires a ⊆ ground.
Multiset unique_part(const Multiset& a, const Multiset& ground);

// ground - a. Requires a ⊆ ground.
Multiset complement(const Multiset& a, const Multiset& ground);

}  // namespace msplit
