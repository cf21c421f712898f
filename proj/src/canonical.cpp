#include "gqt/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gqt {

std::uint64_t SmallGraph::mask() const {
  std::uint64_t m = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) m |= std::uint64_t{1} << pair_index(i, j);
  return m;
}

Graph SmallGraph::to_graph() const {
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

SmallGraph SmallGraph::from_mask(int n, std::uint64_t mask) {
  SmallGraph g;
  g.n = n;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1u) g.set_edge(i, j);
  return g;
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.order() > kMaxSmallOrder)
    throw GraphError("small graph order exceeds " + std::to_string(kMaxSmallOrder));
  SmallGraph s;
  s.n = static_cast<int>(g.order());
  for (int j = 1; j < s.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) s.set_edge(i, j);
  return s;
}

SmallGraph relabel(const SmallGraph& g, const std::array<int, kMaxSmallOrder>& perm) {
  SmallGraph out;
  out.n = g.n;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) out.set_edge(perm[i], perm[j]);
  return out;
}

std::string CanonicalCode::to_string() const {
  std::ostringstream os;
  os << "n" << int(order);
  if (has_pair) os << (pair_flag ? "e" : "n");
  os << ":" << std::hex << bits;
  return os.str();
}

namespace {

// Equitable colour refinement. Vertices below `fixed` get singleton colours
// that stay smallest; colours are ranked by (old colour, sorted neighbour
// colours), which is invariant under relabelling.
std::array<int, kMaxSmallOrder> refine(const SmallGraph& g, int fixed) {
  std::array<int, kMaxSmallOrder> color{};
  for (int v = 0; v < g.n; ++v) color[v] = v < fixed ? v : fixed;
  int classes = std::min(g.n, fixed + (g.n > fixed ? 1 : 0));
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys;
    keys.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u)
        if (g.adjacent(u, v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys.emplace_back(std::move(key), v);
    }
    std::sort(keys.begin(), keys.end());
    int next = 0;
    std::array<int, kMaxSmallOrder> fresh{};
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i > 0 && keys[i].first != keys[i - 1].first) ++next;
      fresh[keys[i].second] = next;
    }
    const int fresh_classes = g.n == 0 ? 0 : next + 1;
    color = fresh;
    if (fresh_classes == classes) break;
    classes = fresh_classes;
  }
  return color;
}

// Calls f(perm) for each labelling that places colour classes in increasing
// order, with every arrangement inside each class.
template <typename F>
void for_each_sorted_labelling(const SmallGraph& g, const std::array<int, kMaxSmallOrder>& color,
                               F&& f) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in `order`
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::array<int, kMaxSmallOrder> perm{};
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      for (int pos = 0; pos < g.n; ++pos) perm[order[pos]] = pos;
      f(perm);
      return;
    }
    auto [b, e] = cells[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      self(self, c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
}

}  // namespace

CanonicalCode canonical_small(const SmallGraph& g, int fixed) {
  std::vector<std::pair<int, int>> edge_list;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) edge_list.emplace_back(i, j);
  const auto color = refine(g, fixed);
  std::uint64_t best = ~std::uint64_t{0};
  for_each_sorted_labelling(g, color, [&](const std::array<int, kMaxSmallOrder>& perm) {
    std::uint64_t m = 0;
    for (auto [i, j] : edge_list) m |= std::uint64_t{1} << pair_index(perm[i], perm[j]);
    best = std::min(best, m);
  });
  CanonicalCode code;
  code.order = static_cast<std::uint8_t>(g.n);
  code.has_pair = fixed == 2;
  code.pair_flag = fixed == 2 && g.adjacent(0, 1);
  code.bits = g.n < 2 ? 0 : best;
  return code;
}

CanonicalCode canonical_code(const Graph& g, std::optional<std::pair<Vertex, Vertex>> pair) {
  if (g.order() > kMaxSmallOrder)
    throw GraphError("canonical_code: order " + std::to_string(g.order()) + " exceeds " +
                     std::to_string(kMaxSmallOrder));
  const SmallGraph s = SmallGraph::from_graph(g);
  if (!pair) return canonical_small(s, 0);
  auto [u, v] = *pair;
  if (u >= g.order() || v >= g.order() || u == v)
    throw GraphError("canonical_code: invalid distinguished pair");
  std::array<int, kMaxSmallOrder> perm{};
  int next = 2;
  for (int w = 0; w < s.n; ++w) {
    if (w == static_cast<int>(u)) perm[w] = 0;
    else if (w == static_cast<int>(v)) perm[w] = 1;
    else perm[w] = next++;
  }
  return canonical_small(relabel(s, perm), 2);
}

std::uint64_t automorphism_count(const SmallGraph& g, int fixed) {
  const auto color = refine(g, fixed);
  const std::uint64_t m = g.mask();
  std::uint64_t count = 0;
  // Automorphisms preserve the refined colouring, so only colour-preserving
  // maps are tried.
  std::array<int, kMaxSmallOrder> perm{};
  auto rec = [&](auto&& self, int v, std::uint16_t used) -> void {
    if (v == g.n) {
      if (relabel(g, perm).mask() == m) ++count;
      return;
    }
    for (int w = 0; w < g.n; ++w) {
      if ((used >> w) & 1u) continue;
      if (color[w] != color[v]) continue;
      // Partial adjacency check keeps the search small.
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(perm[u], w);
      if (!ok) continue;
      perm[v] = w;
      self(self, v + 1, static_cast<std::uint16_t>(used | (1u << w)));
    }
  };
  rec(rec, 0, 0);
  return count;
}

CanonicalCode swap_pair(const CanonicalCode& code) {
  std::array<int, kMaxSmallOrder> perm{};
  for (int v = 0; v < code.order; ++v) perm[v] = v;
  perm[0] = 1;
  perm[1] = 0;
  return canonical_small(relabel(code.graph(), perm), 2);
}

}  // namespace gqt
