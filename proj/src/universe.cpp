#include "msplit/universe.hpp"

#include <algorithm>
#include <numeric>
#include <omp.h>

#include "msplit/errors.hpp"

namespace msplit {

namespace {

std::string element_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "e" + std::to_string(k);
}

void partitions(std::size_t left, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(left - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Multiset> ground_representatives(std::size_t max_delta, std::size_t max_size,
                                             std::size_t min_size) {
  std::vector<Multiset> out;
  for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= max_size; ++size) {
    std::vector<std::vector<std::size_t>> profiles;
    std::vector<std::size_t> cur;
    partitions(size, size, cur, profiles);
    // Fewest repeated elements first.
    std::reverse(profiles.begin(), profiles.end());
    for (const auto& profile : profiles) {
      if (size - profile.size() > max_delta) continue;
      std::vector<Multiset::Entry> entries;
      for (std::size_t k = 0; k < profile.size(); ++k) {
        entries.emplace_back(element_name(k), profile[k]);
      }
      out.emplace_back(std::move(entries));
    }
  }
  return out;
}

SplitUniverse::SplitUniverse(Multiset ground) : ground_(std::move(ground)) {
  const Counts g = to_counts(ground_, ground_);
  const std::size_t width = g.size();

  // Every proper nonempty submultiset, paired with its complement.
  std::vector<Counts> parts;
  Counts c(width, 0);
  while (true) {
    std::size_t k = 0;
    while (k < width && c[k] == g[k]) c[k++] = 0;
    if (k == width) break;
    ++c[k];
    const std::size_t t = counts_total(c);
    if (t > 0 && t < ground_.size()) parts.push_back(c);
  }
  std::map<Counts, bool> taken;
  for (const auto& p : parts) {
    if (taken.count(p)) continue;
    Counts q(width);
    for (std::size_t k = 0; k < width; ++k) q[k] = static_cast<std::uint16_t>(g[k] - p[k]);
    taken[p] = taken[q] = true;
    splits_.push_back(Split::from_part(from_counts(p, ground_), ground_));
  }
  std::sort(splits_.begin(), splits_.end());
  std::map<Counts, std::uint32_t> index;
  for (std::uint32_t s = 0; s < splits_.size(); ++s) {
    index[to_counts(splits_[s].small(), ground_)] = s;
    index[to_counts(splits_[s].large(), ground_)] = s;
    sizes_.push_back(split_size(splits_[s]));
  }

  // Permutations preserving multiplicity, as products of per-class orders.
  std::map<std::uint16_t, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < width; ++k) classes[g[k]].push_back(k);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [m, ks] : classes) blocks.push_back(ks);
  std::vector<std::vector<std::size_t>> orders = blocks;
  while (true) {
    std::vector<std::size_t> perm(width);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t t = 0; t < blocks[b].size(); ++t) perm[blocks[b][t]] = orders[b][t];
    }
    std::vector<std::uint32_t> act(splits_.size());
    for (std::uint32_t s = 0; s < splits_.size(); ++s) {
      const Counts src = to_counts(splits_[s].small(), ground_);
      Counts img(width);
      for (std::size_t k = 0; k < width; ++k) img[perm[k]] = src[k];
      act[s] = index.at(img);
    }
    action_.push_back(std::move(act));
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      if (std::next_permutation(orders[b].begin(), orders[b].end())) break;
    }
    if (b == blocks.size()) break;
  }
}

bool SplitUniverse::is_orbit_minimal(const std::vector<std::uint32_t>& sorted) const {
  std::vector<std::uint32_t> img(sorted.size());
  for (const auto& act : action_) {
    for (std::size_t t = 0; t < sorted.size(); ++t) img[t] = act[sorted[t]];
    std::sort(img.begin(), img.end());
    if (img < sorted) return false;
  }
  return true;
}

void SplitUniverse::extend(std::vector<std::uint32_t>& prefix, const SystemFilter& filter,
                           const std::vector<bool>& allowed,
                           std::vector<std::vector<std::uint32_t>>& out) const {
  if (prefix.size() >= filter.min_splits) out.push_back(prefix);
  if (prefix.size() == filter.max_splits) return;
  const std::uint32_t start = prefix.back() + (filter.distinct ? 1 : 0);
  for (std::uint32_t s = start; s < splits_.size(); ++s) {
    if (!allowed[s]) continue;
    if (filter.equal_size && sizes_[s] != sizes_[prefix.front()]) continue;
    prefix.push_back(s);
    if (is_orbit_minimal(prefix)) extend(prefix, filter, allowed, out);
    prefix.pop_back();
  }
}

namespace {

std::vector<bool> allowed_splits(const std::vector<std::size_t>& sizes,
                                 const SystemFilter& filter) {
  std::vector<bool> allowed(sizes.size(), true);
  if (!filter.sizes.empty()) {
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      allowed[s] = std::find(filter.sizes.begin(), filter.sizes.end(), sizes[s]) !=
                   filter.sizes.end();
    }
  }
  return allowed;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> SplitUniverse::systems_serial(
    const SystemFilter& filter) const {
  std::vector<std::vector<std::uint32_t>> out;
  if (filter.max_splits == 0) return out;
  const auto allowed = allowed_splits(sizes_, filter);
  for (std::uint32_t s = 0; s < splits_.size(); ++s) {
    if (!allowed[s]) continue;
    std::vector<std::uint32_t> prefix{s};
    if (is_orbit_minimal(prefix)) extend(prefix, filter, allowed, out);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> SplitUniverse::systems(const SystemFilter& filter) const {
  if (filter.max_splits == 0) return {};
  const auto allowed = allowed_splits(sizes_, filter);
  const auto roots = static_cast<long long>(splits_.size());
  std::vector<std::vector<std::vector<std::uint32_t>>> per_root(splits_.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long r = 0; r < roots; ++r) {
    const auto s = static_cast<std::uint32_t>(r);
    if (!allowed[s]) continue;
    std::vector<std::uint32_t> prefix{s};
    if (is_orbit_minimal(prefix)) extend(prefix, filter, allowed, per_root[s]);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& v : per_root) {
    for (auto& t : v) out.push_back(std::move(t));
  }
  return out;
}

SplitSystem SplitUniverse::make_system(const std::vector<std::uint32_t>& indices) const {
  SplitSystem system(ground_);
  for (auto s : indices) {
    if (s >= splits_.size()) throw InputError("split index out of range");
    system.add(splits_[s]);
  }
  return system;
}

}  // namespace msplit
