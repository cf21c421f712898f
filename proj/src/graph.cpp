#include "gqt/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace gqt {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_bit(row(v), [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), adj_(n * words_for(n), 0) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" +
                     std::to_string(v) + " with n=" + std::to_string(n_));
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  set_bit({adj_.data() + static_cast<std::size_t>(u) * words_, words_}, v);
  set_bit({adj_.data() + static_cast<std::size_t>(v) * words_, words_}, u);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.all_.assign(words_, 0);
  for (std::size_t i = 0; i < n_; ++i) set_bit(g.all_, i);
  g.non_.resize(adj_.size());
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t w = 0; w < words_; ++w)
      g.non_[v * words_ + w] = ~adj_[v * words_ + w] & g.all_[w];
    clear_bit({g.non_.data() + v * words_, words_}, v);
  }
  g.adj_ = std::move(adj_);
  return g;
}

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for_each_bit(g.non_row(u), [&](std::size_t v) {
      if (v > u) b.add_edge(u, static_cast<Vertex>(v));
    });
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::unordered_set<Vertex> seen;
  for (Vertex v : vs) {
    if (v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
    if (!seen.insert(v).second) throw GraphError("duplicate vertex: " + std::to_string(v));
  }
  GraphBuilder b(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

std::vector<Word> common_neighbor_row(const Graph& g, std::span<const Vertex> s) {
  std::vector<Word> acc(g.all().begin(), g.all().end());
  for (Vertex v : s) {
    if (v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
    and_into(acc, g.row(v));
  }
  return acc;
}

std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  for_each_bit(common_neighbor_row(g, s),
               [&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder gb(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) gb.add_edge(i, static_cast<Vertex>(a + j));
  return std::move(gb).build();
}

}  // namespace gqt
