#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msplit/split.hpp"

namespace test {

// Seed for randomized properties; the test binary accepts --seed=N.
inline std::uint64_t& seed() {
  static std::uint64_t s = 20240611;
  return s;
}

// System on `ground` with one split per listed part.
inline msplit::SplitSystem sys(const std::string& ground, const std::vector<std::string>& parts) {
  const msplit::Multiset g = msplit::Multiset::parse(ground);
  msplit::SplitSystem s(g);
  for (const auto& p : parts) s.add(msplit::Split::from_part(msplit::Multiset::parse(p), g));
  return s;
}

inline std::string fixture(const std::string& name) {
  return std::string(MSPLIT_FIXTURE_DIR) + "/" + name;
}

}  // namespace test
