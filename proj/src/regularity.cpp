#include "gqt/regularity.hpp"

#include <omp.h>

#include <algorithm>

#include "first_diff.hpp"

namespace gqt {

bool SrgParams::feasible() const {
  const auto sv = static_cast<long long>(v), sk = static_cast<long long>(k);
  const auto sl = static_cast<long long>(lambda), sm = static_cast<long long>(mu);
  return sk * (sk - sl - 1) == (sv - sk - 1) * sm;
}

std::optional<std::size_t> check_regular(const Graph& g) {
  if (g.order() == 0) return std::size_t{0};
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

SrgResult srg_parameters(const Graph& g, Exec exec) {
  SrgResult out;
  const auto k = check_regular(g);
  if (!k) return out;
  const std::size_t n = g.order();
  if (*k == 0 || *k + 1 == n || n <= 1) {
    out.status = SrgStatus::kDegenerate;
    return out;
  }
  // Per vertex u: first discrepancy among pairs (u, v > u), edges and non-edges apart.
  std::vector<detail::FirstDiff<Edge>> edge_track(n), non_track(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(exec.resolved())
  for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(n); ++ui) {
    const auto u = static_cast<Vertex>(ui);
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = popcount_and(g.row(u), g.row(v));
      (g.adjacent(u, v) ? edge_track : non_track)[u].see(Edge{u, v}, c);
    }
  }
  detail::FirstDiff<Edge> e, ne;
  for (std::size_t u = 0; u < n; ++u) {
    e.merge_later(edge_track[u]);
    ne.merge_later(non_track[u]);
  }
  if (e.has_diff) {
    out.witness = std::array<Edge, 2>{e.first_key, e.diff_key};
    return out;
  }
  if (ne.has_diff) {
    out.witness = std::array<Edge, 2>{ne.first_key, ne.diff_key};
    return out;
  }
  out.status = SrgStatus::kStronglyRegular;
  out.params = SrgParams{n, *k, e.first_val, ne.first_val};
  return out;
}

std::vector<Vertex> distance_layer(const Graph& g, Vertex x, int i) {
  if (x >= g.order()) throw GraphError("distance_layer: vertex out of range");
  if (i < 0) throw GraphError("distance_layer: negative distance");
  std::vector<Word> seen(g.words(), 0), frontier(g.words(), 0);
  set_bit(seen, x);
  set_bit(frontier, x);
  for (int d = 0; d < i; ++d) {
    std::vector<Word> next(g.words(), 0);
    for_each_bit(frontier, [&](std::size_t v) {
      auto r = g.row(static_cast<Vertex>(v));
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= r[w];
    });
    for (std::size_t w = 0; w < next.size(); ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
    }
    frontier = std::move(next);
  }
  std::vector<Vertex> out;
  for_each_bit(frontier, [&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

Graph subconstituent(const Graph& g, Vertex x, int i) {
  if (i != 1 && i != 2) throw GraphError("subconstituent: i must be 1 or 2");
  const auto layer = distance_layer(g, x, i);
  return induced_subgraph(g, layer);
}

CanonicalCode small_set_code(int size, int edges) {
  if (size < 1 || size > 3 || edges < 0 || edges > pair_count(size))
    throw GraphError("small_set_code: invalid size or edge count");
  // On at most three vertices the edge count determines the class.
  std::uint64_t mask = 0;
  for (int b = 0; b < edges; ++b) mask |= std::uint64_t{1} << b;
  return canonical_small(SmallGraph::from_mask(size, mask), 0);
}

namespace {

using Set3 = std::array<Vertex, 3>;

// Slot of a (size, edges) class in a flat array of 7 entries.
constexpr int slot(int size, int edges) {
  return size == 1 ? 0 : size == 2 ? 1 + edges : 3 + edges;
}

}  // namespace

IsoregularityReport check_isoregular(const Graph& g, int k, Exec exec) {
  if (k < 1 || k > 3) throw GraphError("check_isoregular: k must be in 1..3");
  const std::size_t n = g.order();
  using Track = detail::FirstDiff<Set3>;
  std::vector<std::array<Track, 7>> local(n);
  constexpr Vertex kNone = ~Vertex{0};

#pragma omp parallel num_threads(exec.resolved())
  {
    std::vector<Word> w2(g.words());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ai = 0; ai < static_cast<std::int64_t>(n); ++ai) {
      const auto a = static_cast<Vertex>(ai);
      auto& tr = local[a];
      tr[slot(1, 0)].see(Set3{a, kNone, kNone}, g.degree(a));
      if (k < 2) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        const int eab = g.adjacent(a, b);
        auto ra = g.row(a), rb = g.row(b);
        for (std::size_t w = 0; w < w2.size(); ++w) w2[w] = ra[w] & rb[w];
        tr[slot(2, eab)].see(Set3{a, b, kNone}, popcount(w2));
        if (k < 3) continue;
        for (Vertex c = b + 1; c < n; ++c) {
          const int e = eab + g.adjacent(a, c) + g.adjacent(b, c);
          tr[slot(3, e)].see(Set3{a, b, c}, popcount_and(w2, g.row(c)));
        }
      }
    }
  }

  std::array<Track, 7> merged;
  for (std::size_t a = 0; a < n; ++a)
    for (int s = 0; s < 7; ++s) merged[s].merge_later(local[a][s]);

  IsoregularityReport rep;
  rep.k = k;
  auto to_vec = [](const Set3& s) {
    std::vector<Vertex> v;
    for (Vertex x : s)
      if (x != ~Vertex{0}) v.push_back(x);
    return v;
  };
  const Track* worst = nullptr;
  CanonicalCode worst_code;
  for (int size = 1; size <= k; ++size) {
    for (int e = 0; e <= pair_count(size); ++e) {
      const Track& tr = merged[slot(size, e)];
      if (!tr.has) continue;
      const CanonicalCode code = small_set_code(size, e);
      rep.table[code] = tr.first_val;
      if (tr.has_diff && (!worst || tr.diff_key < worst->diff_key)) {
        worst = &tr;
        worst_code = code;
      }
    }
  }
  if (worst) {
    rep.witness = IsoregularityWitness{worst_code, to_vec(worst->first_key), to_vec(worst->diff_key),
                                       worst->first_val, worst->diff_val};
  }
  return rep;
}

std::optional<std::array<Vertex, 4>> check_k4e_free(const Graph& g) {
  std::vector<Word> common(g.words());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
      std::optional<std::array<Vertex, 4>> hit;
      for_each_bit(common, [&](std::size_t a) {
        if (hit) return;
        auto nr = g.non_row(static_cast<Vertex>(a));
        for (std::size_t w = 0; w < common.size(); ++w) {
          const Word m = common[w] & nr[w];
          if (m) {
            const auto b = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(m)));
            std::array<Vertex, 4> s{u, v, static_cast<Vertex>(a), b};
            std::sort(s.begin(), s.end());
            hit = s;
            return;
          }
        }
      });
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

std::map<std::size_t, std::size_t> triad_center_profile(const Graph& g, Exec exec) {
  const std::size_t n = g.order();
  std::vector<std::map<std::size_t, std::size_t>> local(n);
#pragma omp parallel num_threads(exec.resolved())
  {
    std::vector<Word> both(g.words()), third(g.words());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(n); ++ui) {
      const auto u = static_cast<Vertex>(ui);
      for_each_bit(g.non_row(u), [&](std::size_t vi) {
        const auto v = static_cast<Vertex>(vi);
        if (v <= u) return;
        auto ru = g.row(u), rv = g.row(v);
        auto nu = g.non_row(u), nv = g.non_row(v);
        for (std::size_t w = 0; w < both.size(); ++w) {
          both[w] = ru[w] & rv[w];
          third[w] = nu[w] & nv[w];
        }
        for_each_bit(third, [&](std::size_t wi) {
          if (wi <= vi) return;
          ++local[u][popcount_and(both, g.row(static_cast<Vertex>(wi)))];
        });
      });
    }
  }
  std::map<std::size_t, std::size_t> out;
  for (const auto& m : local)
    for (auto [c, k] : m) out[c] += k;
  return out;
}

}  // namespace gqt
