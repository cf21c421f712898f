#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqt/graph.hpp"

namespace gqt {

inline constexpr int kMaxSmallOrder = 10;

// Index of the unordered pair {i,j}, i < j, in column order. Matches the bit
// order of graph6, so masks of order t occupy the low t(t-1)/2 bits.
constexpr int pair_index(int i, int j) {
  return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Graph of order <= 10 with one 16-bit adjacency row per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxSmallOrder> rows{};

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
  void set_edge(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1u << v);
    rows[v] |= static_cast<std::uint16_t>(1u << u);
  }
  int degree(int v) const { return std::popcount(rows[v]); }
  std::uint64_t mask() const;
  Graph to_graph() const;

  static SmallGraph from_mask(int n, std::uint64_t mask);
  static SmallGraph from_graph(const Graph& g);

  bool operator==(const SmallGraph&) const = default;
};

// Vertex relabelling: result has vertex perm[v] wherever the input had v.
SmallGraph relabel(const SmallGraph& g, const std::array<int, kMaxSmallOrder>& perm);

struct CanonicalCode {
  std::uint8_t order = 0;
  bool has_pair = false;
  bool pair_flag = false;
  std::uint64_t bits = 0;

  int edges() const { return std::popcount(bits); }
  SmallGraph graph() const { return SmallGraph::from_mask(order, bits); }
  std::string to_string() const;

  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits * 131 + c.order * 4 + c.has_pair * 2 + c.pair_flag);
  }
};

// Canonical form of a small graph where vertices 0..fixed-1 keep their labels
// (fixed is 0 or 2). The code is the least adjacency mask over all relabellings
// that sort vertices by a refined colour, so equal codes <=> isomorphic.
CanonicalCode canonical_small(const SmallGraph& g, int fixed);

// Throws GraphError when the order exceeds 10 or the pair is invalid. With a
// pair (u,v) the isomorphism must send u to u and v to v.
CanonicalCode canonical_code(const Graph& g,
                             std::optional<std::pair<Vertex, Vertex>> pair = std::nullopt);

// Number of automorphisms of g fixing each of vertices 0..fixed-1.
std::uint64_t automorphism_count(const SmallGraph& g, int fixed);

// Swap the two distinguished slots of a pair code and re-canonicalise.
CanonicalCode swap_pair(const CanonicalCode& code);

}  // namespace gqt
