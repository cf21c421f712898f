#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gqt/canonical.hpp"
#include "gqt/exec.hpp"
#include "gqt/graph.hpp"

namespace gqt {

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;

  // k(k - lambda - 1) == (v - k - 1) mu
  bool feasible() const;
  bool operator==(const SrgParams&) const = default;
};

enum class SrgStatus { kStronglyRegular, kNotStronglyRegular, kDegenerate };

struct SrgResult {
  SrgStatus status = SrgStatus::kNotStronglyRegular;
  std::optional<SrgParams> params;  // set for kStronglyRegular
  // For kNotStronglyRegular on a regular graph: two pairs of the same
  // adjacency with different common-neighbour counts.
  std::optional<std::array<Edge, 2>> witness;
};

std::optional<std::size_t> check_regular(const Graph& g);

// Complete and edgeless graphs (including orders 0 and 1) are degenerate.
SrgResult srg_parameters(const Graph& g, Exec exec = {});

// Induced subgraph on the vertices at distance exactly i from x (i = 1 or 2),
// in increasing vertex order.
Graph subconstituent(const Graph& g, Vertex x, int i);
std::vector<Vertex> distance_layer(const Graph& g, Vertex x, int i);

struct IsoregularityWitness {
  CanonicalCode code;
  std::vector<Vertex> first, second;
  std::size_t first_valency = 0, second_valency = 0;
};

struct IsoregularityReport {
  int k = 0;
  // Induced-subgraph code (no distinguished pair) -> common valency.
  std::map<CanonicalCode, std::size_t> table;
  std::optional<IsoregularityWitness> witness;
  bool passed() const { return !witness.has_value(); }
};

// Throws GraphError unless 1 <= k <= 3. The witness is the
// lexicographically first vertex set whose valency differs from the first
// set with the same code.
IsoregularityReport check_isoregular(const Graph& g, int k, Exec exec = {});

// Code of the graph on `size` <= 3 vertices with `edges` edges.
CanonicalCode small_set_code(int size, int edges);

// First induced K4 - e in lexicographic edge order, or none.
std::optional<std::array<Vertex, 4>> check_k4e_free(const Graph& g);

// Number of centers -> number of triads with that many centers.
std::map<std::size_t, std::size_t> triad_center_profile(const Graph& g, Exec exec = {});

}  // namespace gqt
