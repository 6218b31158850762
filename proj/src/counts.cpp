#include "msplit/counts.hpp"

#include "msplit/errors.hpp"

namespace msplit {

Counts to_counts(const Multiset& m, const Multiset& ground) {
  const auto& g = ground.entries();
  Counts out(g.size(), 0);
  std::size_t k = 0;
  for (const auto& [name, mult] : m.entries()) {
    while (k < g.size() && g[k].first < name) ++k;
    if (k == g.size() || g[k].first != name) {
      throw InputError("element '" + name + "' is not in the ground " +
                       ground.braced());
    }
    out[k] = static_cast<std::uint16_t>(mult);
  }
  return out;
}

Multiset from_counts(const Counts& c, const Multiset& ground) {
  std::vector<Multiset::Entry> entries;
  const auto& g = ground.entries();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] > 0) entries.emplace_back(g[k].first, c[k]);
  }
  return Multiset(std::move(entries));
}

}  // namespace msplit
