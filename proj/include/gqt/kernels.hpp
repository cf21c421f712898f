#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gqt/canonical.hpp"
#include "gqt/exec.hpp"
#include "gqt/graph.hpp"
#include "gqt/types.hpp"

// Counting kernels. Each batch kernel has a plain serial version kept as the
// reference, and an OpenMP version over the pair list whose output is
// index-for-index identical.
namespace gqt {

// |N(u) ∩ N(v)| per pair.
std::vector<std::uint32_t> common_neighbor_counts_serial(const Graph& g, std::span<const Edge> pairs);
std::vector<std::uint32_t> common_neighbor_counts(const Graph& g, std::span<const Edge> pairs, Exec exec = {});

// Exhaustive fingerprint: counts[c] is the number of (t-2)-subsets S of the
// other vertices such that G[{x,y} ∪ S], with x -> slot 0 and y -> slot 1,
// lies in class c of the table. Needs table.has_lookup().
void fingerprint_pair(const Graph& g, const TypeTable& table, Vertex x, Vertex y,
                      std::span<std::uint64_t> counts);
std::vector<std::vector<std::uint64_t>> fingerprints_serial(const Graph& g, const TypeTable& table,
                                                            std::span<const Edge> pairs);
std::vector<std::vector<std::uint64_t>> fingerprints(const Graph& g, const TypeTable& table,
                                                     std::span<const Edge> pairs, Exec exec = {});

// Placement order and relations for the anchored embedder. Vertices are
// relabelled so x0, y0 come first and each next additional vertex has the
// most edges to those already placed.
struct EmbedPlan {
  int t = 0;
  bool pair_adjacent = false;
  SmallGraph placed;                  // base relabelled into placement order
  std::array<int, kMaxSmallOrder> slot_of_position{};  // position -> base slot
  std::uint64_t automorphisms = 1;    // automorphisms of base fixing x0 and y0

  static EmbedPlan make(const SmallGraph& base);
};

// Labelled embeddings of the type sending x0 -> x, y0 -> y (induced).
std::uint64_t embeddings_at(const Graph& g, const EmbedPlan& plan, Vertex x, Vertex y);
// Induced copies: embeddings divided by the pair-fixing automorphism count.
// Zero when the pair's adjacency differs from the type's.
std::uint64_t anchored_count(const Graph& g, const EmbedPlan& plan, Vertex x, Vertex y);
std::vector<std::uint64_t> anchored_counts_serial(const Graph& g, const EmbedPlan& plan,
                                                  std::span<const Edge> pairs);
std::vector<std::uint64_t> anchored_counts(const Graph& g, const EmbedPlan& plan,
                                           std::span<const Edge> pairs, Exec exec = {});

// Induced K4,4 subgraphs with x and y on opposite sides. Zero for non-edges.
std::uint64_t k44_at_edge(const Graph& g, Vertex x, Vertex y);
std::vector<std::uint64_t> k44_counts_serial(const Graph& g, std::span<const Edge> edges);
std::vector<std::uint64_t> k44_counts(const Graph& g, std::span<const Edge> edges, Exec exec = {});

}  // namespace gqt
