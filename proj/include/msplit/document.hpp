#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msplit/split.hpp"

namespace msplit {

// A split-system input file:
//
//   # comment
//   multiset: a^2 b^2 c^2 x y
//   split: a b | a b c^2 x y
//   option: name=example
//
// Exactly one multiset line, before any split line. Both sides of a split
// must be nonempty and sum to the multiset.
struct Document {
  SplitSystem system;
  std::vector<std::pair<std::string, std::string>> options;

  const Multiset& ground() const { return system.ground(); }
  friend bool operator==(const Document&, const Document&) = default;
};

// Throws ParseError with the 1-based line and column of the problem.
Document parse_document(std::string_view text);
std::string print_document(const Document& doc);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace msplit
