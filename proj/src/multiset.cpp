#include "msplit/multiset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "msplit/errors.hpp"

namespace msplit {

namespace {

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '.' || c == '-' || c == '\'';
}

}  // namespace

bool is_element_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), is_name_char);
}

Multiset::Multiset(std::initializer_list<Entry> entries) : entries_(entries) {
  normalize();
}

Multiset::Multiset(std::vector<Entry> entries) : entries_(std::move(entries)) {
  normalize();
}

void Multiset::normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!is_element_name(e.first)) {
      throw InputError("invalid element name '" + e.first + "'");
    }
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  entries_ = std::move(merged);
  total_ = 0;
  for (const auto& e : entries_) total_ += e.second;
}

Multiset Multiset::parse(std::string_view text) {
  std::vector<Entry> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (pos == start) {
      throw InputError("unexpected character '" + std::string(1, text[pos]) +
                       "' at offset " + std::to_string(pos));
    }
    std::string name(text.substr(start, pos - start));
    std::size_t mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t num_start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      auto [ptr, ec] =
          std::from_chars(text.data() + num_start, text.data() + pos, mult);
      if (num_start == pos || ec != std::errc() || mult == 0) {
        throw InputError("bad multiplicity for element '" + name + "'");
      }
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw InputError("unexpected character '" + std::string(1, text[pos]) +
                       "' after element '" + name + "'");
    }
    entries.emplace_back(std::move(name), mult);
  }
  return Multiset(std::move(entries));
}

std::size_t Multiset::count(std::string_view name) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), name,
      [](const Entry& e, std::string_view n) { return e.first < n; });
  return (it != entries_.end() && it->first == name) ? it->second : 0;
}

std::string Multiset::str() const {
  std::string out;
  for (const auto& [name, mult] : entries_) {
    if (!out.empty()) out += ' ';
    out += name;
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

std::string Multiset::braced() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, mult] : entries_) {
    if (!first) out += ',';
    first = false;
    out += name;
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out + "}";
}

Multiset& Multiset::operator+=(const Multiset& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  total_ += other.total_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Multiset& m) {
  return os << m.braced();
}

std::size_t delta(const Multiset& m) { return m.size() - m.distinct(); }

bool is_submultiset(const Multiset& a, const Multiset& b) {
  if (a.size() > b.size()) return false;
  auto it = b.entries().begin();
  for (const auto& [name, mult] : a.entries()) {
    while (it != b.entries().end() && it->first < name) ++it;
    if (it == b.entries().end() || it->first != name || it->second < mult) {
      return false;
    }
  }
  return true;
}

bool is_proper_submultiset(const Multiset& a, const Multiset& b) {
  return a.size() < b.size() && is_submultiset(a, b);
}

Multiset unique_part(const Multiset& a, const Multiset& ground) {
  if (!is_submultiset(a, ground)) {
    throw InputError(a.braced() + " is not a submultiset of " + ground.braced());
  }
  std::vector<Multiset::Entry> out;
  for (const auto& [name, mult] : a.entries()) {
    if (ground.count(name) == 1) out.emplace_back(name, 1);
  }
  return Multiset(std::move(out));
}

Multiset complement(const Multiset& a, const Multiset& ground) {
  if (!is_submultiset(a, ground)) {
    throw InputError(a.braced() + " is not a submultiset of " + ground.braced());
  }
  std::vector<Multiset::Entry> out;
  for (const auto& [name, mult] : ground.entries()) {
    std::size_t rest = mult - a.count(name);
    if (rest > 0) out.emplace_back(name, rest);
  }
  return Multiset(std::move(out));
}

}  // namespace msplit
