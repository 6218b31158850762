#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msplit/errors.hpp"
#include "msplit/multiset.hpp"
#include "msplit/split.hpp"

namespace msplit {

// An unvalidated vertex-labelled graph.
struct RawTree {
  std::vector<Multiset> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

enum class TreeDefect { kStructure, kM1, kM2 };

class TreeError : public InputError {
 public:
  TreeError(TreeDefect defect, const std::string& message)
      : InputError(message), defect_(defect) {}
  TreeDefect defect() const { return defect_; }

 private:
  TreeDefect defect_;
};

// A labelled tree over a ground multiset whose labels sum to the ground (M1)
// and whose vertices of degree 1 or 2 carry nonempty labels (M2). A single
// vertex is accepted; M1 then forces its label to be the whole ground.
class MTree {
 public:
  const Multiset& ground() const { return ground_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Multiset& label(std::size_t v) const { return labels_[v]; }
  const std::vector<Multiset>& labels() const { return labels_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::vector<std::size_t> leaves() const;

 private:
  friend MTree validate(RawTree raw, const Multiset& ground);
  MTree() = default;

  Multiset ground_;
  std::vector<Multiset> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Throws TreeError naming the violated condition.
MTree validate(RawTree raw, const Multiset& ground);

// One split per edge, in edge order.
std::vector<Split> induced_splits(const MTree& t);

// Centroid-rooted encoding with children sorted by their own encodings; the
// smaller rooting is used for a bicentroidal tree. Equal iff isomorphic.
std::string canonical_form(const MTree& t);
bool is_isomorphic(const MTree& a, const MTree& b);

// Text format: node := "(" label [":" node ("," node)*] ")",
// label := "{" [elem ("," elem)*] "}", elem := name ["^" count].
std::string serialize(const MTree& t);
RawTree parse_tree(std::string_view text);
// Ground defaults to the sum of all labels.
MTree parse_mtree(std::string_view text);
MTree parse_mtree(std::string_view text, const Multiset& ground);

}  // namespace msplit
