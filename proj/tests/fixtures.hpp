#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>

#include "gqt/geometry.hpp"
#include "gqt/graph.hpp"
#include "gqt/registry.hpp"

namespace gqt::testing {

struct BuiltGq {
  PartialLinearSpace pls;
  Graph graph;
};

// Built-in constructions, built once per test binary.
inline const BuiltGq& gq(const std::string& name, bool dual = false) {
  static std::map<std::pair<std::string, bool>, BuiltGq> cache;
  auto it = cache.find({name, dual});
  if (it == cache.end()) {
    Construction c = build_construction(name, dual);
    Graph g = point_graph(c.gq);
    it = cache.emplace(std::pair{name, dual}, BuiltGq{std::move(c.gq), std::move(g)}).first;
  }
  return it->second;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Cayley graph on Z_m x Z_m for a symmetric connection set.
inline Graph cayley_square(int m, const std::vector<std::pair<int, int>>& conn) {
  GraphBuilder b(m * m);
  for (int a = 0; a < m * m; ++a)
    for (auto [dx, dy] : conn) {
      const int c = ((a / m + dx + m) % m) * m + (a % m + dy + m) % m;
      if (c != a) b.add_edge(a, c);
    }
  return std::move(b).build();
}

inline Graph shrikhande() { return cayley_square(4, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}); }

inline Graph rook(int m) {
  std::vector<std::pair<int, int>> conn;
  for (int d = 1; d < m; ++d) {
    conn.push_back({d, 0});
    conn.push_back({0, d});
  }
  return cayley_square(m, conn);
}

// Paley graph of prime order q = 1 mod 4.
inline Graph paley(int q) {
  std::vector<bool> square(q, false);
  for (int x = 1; x < q; ++x) square[x * x % q] = true;
  GraphBuilder b(q);
  for (int j = 1; j < q; ++j)
    for (int i = 0; i < j; ++i)
      if (square[j - i]) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).build();
}

}  // namespace gqt::testing
