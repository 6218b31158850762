#include "msplit/document.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "msplit/errors.hpp"

namespace msplit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokens(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

Multiset parse_side(std::string_view text, std::size_t offset, std::size_t line) {
  std::vector<Multiset::Entry> entries;
  for (const Token& tok : tokens(text, offset)) {
    std::string_view name = tok.text;
    std::size_t mult = 1;
    if (const auto caret = name.find('^'); caret != std::string_view::npos) {
      const std::string_view digits = name.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mult);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
          mult == 0) {
        throw ParseError(line, tok.column + caret + 1,
                         "bad multiplicity in '" + std::string(tok.text) + "'");
      }
      name = name.substr(0, caret);
    }
    if (!is_element_name(name)) {
      throw ParseError(line, tok.column, "bad element name '" + std::string(name) + "'");
    }
    entries.emplace_back(std::string(name), mult);
  }
  return Multiset(std::move(entries));
}

// Column of the first token naming an element absent from (or too frequent
// for) the ground, or 0.
std::size_t offending_column(std::string_view text, std::size_t offset, const Multiset& side,
                             const Multiset& ground) {
  for (const Token& tok : tokens(text, offset)) {
    const std::string name(tok.text.substr(0, tok.text.find('^')));
    if (side.count(name) > ground.count(name)) return tok.column;
  }
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  bool have_ground = false;
  std::size_t line_no = 0;
  std::size_t ground_line = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      const std::size_t col = line.find_first_not_of(" \t") + 1;
      throw ParseError(line_no, col, "expected 'multiset:', 'split:' or 'option:'");
    }
    const std::string_view keyword = trim(line.substr(0, colon));
    const std::string_view body = line.substr(colon + 1);
    const std::size_t body_offset = colon + 1;

    if (keyword == "multiset") {
      if (have_ground) {
        throw ParseError(line_no, 1,
                         "duplicate multiset line (first on line " + std::to_string(ground_line) + ")");
      }
      Multiset ground = parse_side(body, body_offset, line_no);
      if (ground.empty()) throw ParseError(line_no, colon + 2, "empty multiset");
      doc.system = SplitSystem(std::move(ground));
      have_ground = true;
      ground_line = line_no;
    } else if (keyword == "split") {
      if (!have_ground) throw ParseError(line_no, 1, "split before the multiset line");
      const std::size_t bar = body.find('|');
      if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos) {
        throw ParseError(line_no, body_offset + 1, "a split needs exactly one '|'");
      }
      const std::string_view lhs_text = body.substr(0, bar);
      const std::string_view rhs_text = body.substr(bar + 1);
      const Multiset lhs = parse_side(lhs_text, body_offset, line_no);
      const Multiset rhs = parse_side(rhs_text, body_offset + bar + 1, line_no);
      const Multiset& ground = doc.system.ground();
      const Multiset sum = lhs + rhs;
      for (const auto& [name, m] : sum.entries()) {
        if (ground.count(name) == 0) {
          std::size_t col = offending_column(lhs_text, body_offset, lhs, ground);
          if (col == 0) col = offending_column(rhs_text, body_offset + bar + 1, rhs, ground);
          throw ParseError(line_no, col, "unknown element '" + name + "'");
        }
      }
      if (lhs.empty() || rhs.empty()) {
        throw ParseError(line_no, body_offset + bar + 1, "both sides of a split must be nonempty");
      }
      if (!(sum == ground)) {
        throw ParseError(line_no, body_offset + 1,
                         "sides sum to " + sum.braced() + ", not the multiset " +
                             ground.braced());
      }
      doc.system.add(Split::from_sides(lhs, rhs, ground));
    } else if (keyword == "option") {
      const std::string_view kv = trim(body);
      const std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos || trim(kv.substr(0, eq)).empty()) {
        throw ParseError(line_no, body_offset + 1, "expected option: key=value");
      }
      doc.options.emplace_back(std::string(trim(kv.substr(0, eq))),
                               std::string(trim(kv.substr(eq + 1))));
    } else {
      throw ParseError(line_no, line.find_first_not_of(" \t") + 1,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_ground) throw ParseError(line_no + 1, 1, "missing multiset line");
  return doc;
}

std::string print_document(const Document& doc) {
  std::ostringstream os;
  os << "multiset: " << doc.ground().str() << '\n';
  for (const auto& s : doc.system.splits()) os << "split: " << s.str() << '\n';
  for (const auto& [k, v] : doc.options) os << "option: " << k << '=' << v << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace msplit
