#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "msplit/counts.hpp"
#include "msplit/mtree.hpp"
#include "msplit/split.hpp"

namespace msplit {

// Brute-force compatibility by enumerating every M-tree with the right number
// of edges. Shares nothing with the containment-graph engine.
struct OracleBudget {
  std::size_t max_splits = 4;
  std::size_t max_ground = 8;
};

struct OracleResult {
  bool compatible = false;
  // Representations up to isomorphism, sorted by canonical form.
  std::vector<MTree> trees;
};

// Throws BudgetExceeded if the system or ground is larger than `budget`.
OracleResult oracle_compatible(const SplitSystem& system, const OracleBudget& budget = {});

namespace oracle {

struct Shape {
  std::size_t vertices = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// One labelled representative per unlabelled tree on `vertices` vertices,
// found by decoding every Prüfer sequence.
std::vector<Shape> tree_shapes(std::size_t vertices);

// Order-insensitive key of a split multiset: each split reduced to the
// lexicographically smaller of its two part vectors, then sorted.
using SplitKey = std::vector<Counts>;
SplitKey split_key(const SplitSystem& system);

// Called with (worker index, shape, per-vertex label counts).
using LabelingVisitor =
    std::function<void(int, const Shape&, const std::vector<Counts>&)>;

// Every M2-valid labelling (M1 holds by construction) of every shape with
// `edges` edges. The parallel form calls `visit` concurrently from
// worker_count() workers; the serial form always passes worker 0.
void for_each_labeling(const Multiset& ground, std::size_t edges, const LabelingVisitor& visit);
void for_each_labeling_serial(const Multiset& ground, std::size_t edges,
                              const LabelingVisitor& visit);
int worker_count();

// Key of the split multiset induced by a labelled shape.
SplitKey induced_key(const Shape& shape, const std::vector<Counts>& labels,
                     const Counts& ground);

// Every representable split multiset over one ground with up to `max_edges`
// splits, mapped to the canonical forms of its representations.
class Catalogue {
 public:
  Catalogue(const Multiset& ground, std::size_t max_edges, bool parallel = true);

  const Multiset& ground() const { return ground_; }
  std::size_t max_edges() const { return max_edges_; }
  // Number of non-isomorphic representations (0 = incompatible).
  std::size_t representation_count(const SplitSystem& system) const;
  const std::set<std::string>* representations(const SplitSystem& system) const;
  std::size_t system_count() const;

 private:
  Multiset ground_;
  std::size_t max_edges_;
  std::vector<std::map<SplitKey, std::set<std::string>>> by_edges_;
};

}  // namespace oracle

}  // namespace msplit
