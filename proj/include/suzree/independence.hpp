#pragma once

// Exact maximum independent sets on small graphs (a dozen vertices at most),
// by exhaustive subset enumeration.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace suzree {

struct ClassGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> adjacent;  // symmetric, false on the diagonal

  std::size_t size() const noexcept { return labels.size(); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return i;
    }
    return std::nullopt;
  }

  bool is_independent(std::uint32_t mask) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < size(); ++j) {
        if ((mask >> j & 1u) && adjacent[i][j]) return false;
      }
    }
    return true;
  }
};

struct MaxIndependent {
  int size = 0;
  std::vector<std::uint32_t> sets;  // bit masks over ClassGraph::labels, ascending
};

/// All maximum independent sets, optionally restricted to sets containing
/// vertex `required`.
inline MaxIndependent max_independent_sets(const ClassGraph& g, std::optional<std::size_t> required = {}) {
  if (g.size() > 20) throw std::length_error("max_independent_sets: graph too large for exhaustive search");
  MaxIndependent out;
  const std::uint32_t limit = std::uint32_t{1} << g.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (required && !(mask >> *required & 1u)) continue;
    if (!g.is_independent(mask)) continue;
    const int k = std::popcount(mask);
    if (k > out.size) {
      out.size = k;
      out.sets.clear();
    }
    if (k == out.size) out.sets.push_back(mask);
  }
  return out;
}

inline std::vector<std::string> mask_labels(const ClassGraph& g, std::uint32_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mask >> i & 1u) out.push_back(g.labels[i]);
  }
  return out;
}

}  // namespace suzree
