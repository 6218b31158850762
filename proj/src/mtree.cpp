#include "msplit/mtree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace msplit {

std::vector<std::size_t> MTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (adj_[v].size() == 1) out.push_back(v);
  }
  return out;
}

MTree validate(RawTree raw, const Multiset& ground) {
  const std::size_t nv = raw.labels.size();
  if (nv == 0) throw TreeError(TreeDefect::kStructure, "tree has no vertices");
  if (raw.edges.size() != nv - 1) {
    throw TreeError(TreeDefect::kStructure,
                    "tree on " + std::to_string(nv) + " vertices needs " +
                        std::to_string(nv - 1) + " edges, got " +
                        std::to_string(raw.edges.size()));
  }
  std::vector<std::vector<std::size_t>> adj(nv);
  for (auto [u, v] : raw.edges) {
    if (u >= nv || v >= nv || u == v) {
      throw TreeError(TreeDefect::kStructure, "bad edge {" + std::to_string(u) +
                                                  "," + std::to_string(v) + "}");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(nv, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) throw TreeError(TreeDefect::kStructure, "graph is not connected");

  Multiset total;
  for (const auto& l : raw.labels) total += l;
  if (total != ground) {
    throw TreeError(TreeDefect::kM1, "labels sum to " + total.braced() +
                                         ", expected " + ground.braced());
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t deg = adj[v].size();
    if ((deg == 1 || deg == 2) && raw.labels[v].empty()) {
      throw TreeError(TreeDefect::kM2, "vertex " + std::to_string(v) + " of degree " +
                                           std::to_string(deg) + " has an empty label");
    }
  }
  if (nv == 1 && raw.labels[0].empty() && !ground.empty()) {
    throw TreeError(TreeDefect::kM2, "single vertex has an empty label");
  }

  MTree t;
  t.ground_ = ground;
  t.labels_ = std::move(raw.labels);
  t.edges_ = std::move(raw.edges);
  t.adj_ = std::move(adj);
  return t;
}

std::vector<Split> induced_splits(const MTree& t) {
  const std::size_t nv = t.vertex_count();
  // Iterative DFS from vertex 0: parent pointers and post-order subtree sums.
  std::vector<std::size_t> parent(nv, nv), order;
  order.reserve(nv);
  std::vector<std::size_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (std::size_t w : t.neighbors(u)) {
      if (parent[w] == nv) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<Multiset> below(t.labels());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) below[parent[*it]] += below[*it];
  }
  std::vector<Split> out;
  out.reserve(t.edge_count());
  for (auto [u, v] : t.edges()) {
    const std::size_t child = parent[v] == u ? v : u;
    out.push_back(Split::from_part(below[child], t.ground()));
  }
  return out;
}

namespace {

std::string encode(const MTree& t, std::size_t v, std::size_t from) {
  std::vector<std::string> kids;
  for (std::size_t w : t.neighbors(v)) {
    if (w != from) kids.push_back(encode(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + t.label(v).braced();
  for (std::size_t k = 0; k < kids.size(); ++k) {
    out += k == 0 ? ": " : ", ";
    out += kids[k];
  }
  return out + ")";
}

std::vector<std::size_t> centroids(const MTree& t) {
  const std::size_t nv = t.vertex_count();
  std::vector<std::size_t> parent(nv, nv), order, size(nv, 1);
  std::vector<std::size_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (std::size_t w : t.neighbors(u)) {
      if (parent[w] == nv) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[parent[*it]] += size[*it];
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t heaviest = nv - size[v];
    for (std::size_t w : t.neighbors(v)) {
      if (w != v && parent[w] == v) heaviest = std::max(heaviest, size[w]);
    }
    if (2 * heaviest <= nv) out.push_back(v);
  }
  return out;
}

}  // namespace

std::string canonical_form(const MTree& t) {
  std::string best;
  for (std::size_t c : centroids(t)) {
    std::string enc = encode(t, c, c);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

bool is_isomorphic(const MTree& a, const MTree& b) {
  return a.ground() == b.ground() && a.vertex_count() == b.vertex_count() &&
         canonical_form(a) == canonical_form(b);
}

std::string serialize(const MTree& t) { return canonical_form(t); }

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RawTree parse() {
    RawTree tree;
    skip_ws();
    node(tree);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after tree");
    return tree;
  }

 private:
  std::size_t node(RawTree& tree) {
    expect('(');
    skip_ws();
    const std::size_t id = tree.labels.size();
    tree.labels.push_back(label());
    skip_ws();
    if (peek() == ':') {
      ++pos_;
      while (true) {
        skip_ws();
        const std::size_t child = node(tree);
        tree.edges.emplace_back(id, child);
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect(')');
    return id;
  }

  Multiset label() {
    expect('{');
    std::vector<Multiset::Entry> entries;
    skip_ws();
    if (peek() != '}') {
      while (true) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_element_name(text_.substr(pos_, 1))) ++pos_;
        if (start == pos_) fail("expected an element name");
        std::string name(text_.substr(start, pos_ - start));
        std::size_t mult = 1;
        if (peek() == '^') {
          ++pos_;
          const std::size_t num = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
          auto [p, ec] = std::from_chars(text_.data() + num, text_.data() + pos_, mult);
          if (num == pos_ || ec != std::errc() || mult == 0) fail("bad multiplicity");
        }
        entries.emplace_back(std::move(name), mult);
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('}');
    return Multiset(std::move(entries));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

MTree parse_mtree(std::string_view text) {
  RawTree raw = parse_tree(text);
  Multiset ground;
  for (const auto& l : raw.labels) ground += l;
  return validate(std::move(raw), ground);
}

MTree parse_mtree(std::string_view text, const Multiset& ground) {
  return validate(parse_tree(text), ground);
}

}  // namespace msplit
