#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqt/bits.hpp"

namespace gqt {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphBuilder;

// Dense simple undirected graph. Each vertex owns a bit row of neighbours and
// a bit row of non-neighbours (self excluded from both). Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const { return test_bit(row(u), v); }

  std::span<const Word> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  // Vertices distinct from v and not adjacent to it.
  std::span<const Word> non_row(Vertex v) const {
    return {non_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  // All n vertices.
  std::span<const Word> all() const { return all_; }

  std::size_t degree(Vertex v) const { return popcount(row(v)); }
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> adj_;
  std::vector<Word> non_;
  std::vector<Word> all_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const { return n_; }
  // Throws GraphError on out-of-range endpoints or loops. Duplicates collapse.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const {
    return test_bit({adj_.data() + static_cast<std::size_t>(u) * words_, words_}, v);
  }
  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> adj_;
};

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

Graph complement(const Graph& g);

// Graph on vs.size() vertices; vertex i of the result is vs[i] of g.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

// Intersection of the neighbourhoods of s (all vertices when s is empty).
std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> s);

// Bit-row form of common_neighbors.
std::vector<Word> common_neighbor_row(const Graph& g, std::span<const Vertex> s);

// Small named graphs used throughout tests and constructions.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

}  // namespace gqt
