#include "gqt/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace gqt {

std::vector<std::uint32_t> common_neighbor_counts_serial(const Graph& g, std::span<const Edge> pairs) {
  std::vector<std::uint32_t> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out[i] = static_cast<std::uint32_t>(popcount_and(g.row(pairs[i].first), g.row(pairs[i].second)));
  return out;
}

std::vector<std::uint32_t> common_neighbor_counts(const Graph& g, std::span<const Edge> pairs, Exec exec) {
  std::vector<std::uint32_t> out(pairs.size());
  const auto m = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(static) num_threads(exec.resolved())
  for (std::int64_t i = 0; i < m; ++i)
    out[i] = static_cast<std::uint32_t>(popcount_and(g.row(pairs[i].first), g.row(pairs[i].second)));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive fingerprints.

namespace {

class SubsetScan {
 public:
  SubsetScan(const Graph& g, const TypeTable& table, Vertex x, Vertex y, std::span<std::uint64_t> counts)
      : g_(g), t_(table.order()), counts_(counts) {
    if (!table.has_lookup()) throw GraphError("fingerprint: type order has no lookup table");
    if (x == y || x >= g.order() || y >= g.order()) throw GraphError("fingerprint: invalid pair");
    if (counts.size() != table.size()) throw GraphError("fingerprint: count span has wrong size");
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != x && v != y) rest_.push_back(v);
    lut_ = &table;
    const std::size_t m = rest_.size();
    pat_.assign(static_cast<std::size_t>(t_ + 1), std::vector<std::uint8_t>(m, 0));
    if (t_ >= 3)
      for (std::size_t j = 0; j < m; ++j)
        pat_[2][j] = static_cast<std::uint8_t>(g.adjacent(x, rest_[j]) | (g.adjacent(y, rest_[j]) << 1));
    base_mask_ = g.adjacent(x, y) ? 1u : 0u;
  }

  void run() {
    if (t_ == 2) {
      ++counts_[lut_->class_of(base_mask_)];
      return;
    }
    if (rest_.size() < static_cast<std::size_t>(t_ - 2)) return;
    scan(2, 0, base_mask_);
  }

 private:
  void scan(int p, std::size_t start, std::uint64_t mask) {
    const std::size_t m = rest_.size();
    const std::size_t last = m - static_cast<std::size_t>(t_ - p);
    const int off = p * (p - 1) / 2;
    const std::uint8_t* pat = pat_[p].data();
    if (p == t_ - 1) {
      for (std::size_t i = start; i <= last; ++i)
        ++counts_[lut_->class_of(mask | (std::uint64_t{pat[i]} << off))];
      return;
    }
    std::uint8_t* next = pat_[p + 1].data();
    for (std::size_t i = start; i <= last; ++i) {
      auto row = g_.row(rest_[i]);
      for (std::size_t j = i + 1; j < m; ++j)
        next[j] = static_cast<std::uint8_t>(pat[j] | (test_bit(row, rest_[j]) << p));
      scan(p + 1, i + 1, mask | (std::uint64_t{pat[i]} << off));
    }
  }

  const Graph& g_;
  int t_;
  std::span<std::uint64_t> counts_;
  const TypeTable* lut_ = nullptr;
  std::vector<Vertex> rest_;
  std::vector<std::vector<std::uint8_t>> pat_;  // pat_[p][j]: adjacency of rest_[j] to slots < p
  std::uint64_t base_mask_ = 0;
};

}  // namespace

void fingerprint_pair(const Graph& g, const TypeTable& table, Vertex x, Vertex y,
                      std::span<std::uint64_t> counts) {
  std::fill(counts.begin(), counts.end(), 0);
  SubsetScan(g, table, x, y, counts).run();
}

std::vector<std::vector<std::uint64_t>> fingerprints_serial(const Graph& g, const TypeTable& table,
                                                            std::span<const Edge> pairs) {
  std::vector<std::vector<std::uint64_t>> out(pairs.size(), std::vector<std::uint64_t>(table.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) fingerprint_pair(g, table, pairs[i].first, pairs[i].second, out[i]);
  return out;
}

std::vector<std::vector<std::uint64_t>> fingerprints(const Graph& g, const TypeTable& table,
                                                     std::span<const Edge> pairs, Exec exec) {
  std::vector<std::vector<std::uint64_t>> out(pairs.size(), std::vector<std::uint64_t>(table.size()));
  const auto m = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.resolved())
  for (std::int64_t i = 0; i < m; ++i) fingerprint_pair(g, table, pairs[i].first, pairs[i].second, out[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Anchored embeddings.

EmbedPlan EmbedPlan::make(const SmallGraph& base) {
  if (base.n < 2 || base.n > kMaxSmallOrder) throw GraphError("EmbedPlan: type order must be in 2..10");
  EmbedPlan plan;
  plan.t = base.n;
  plan.pair_adjacent = base.adjacent(0, 1);
  plan.automorphisms = automorphism_count(base, 2);

  std::vector<int> order{0, 1};
  std::uint16_t placed_mask = 0b11;
  while (static_cast<int>(order.size()) < base.n) {
    int best = -1, best_links = -1;
    for (int s = 2; s < base.n; ++s) {
      if ((placed_mask >> s) & 1u) continue;
      const int links = std::popcount(static_cast<std::uint16_t>(base.rows[s] & placed_mask));
      if (links > best_links) {
        best = s;
        best_links = links;
      }
    }
    order.push_back(best);
    placed_mask |= static_cast<std::uint16_t>(1u << best);
  }
  std::array<int, kMaxSmallOrder> perm{};
  for (int pos = 0; pos < base.n; ++pos) {
    perm[order[pos]] = pos;
    plan.slot_of_position[pos] = order[pos];
  }
  plan.placed = relabel(base, perm);
  return plan;
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& g, const EmbedPlan& plan) : g_(g), plan_(plan), w_(g.words()) {
    // Level p stores candidate rows for positions p..t-1.
    std::size_t total = 0;
    for (int p = 2; p < plan.t; ++p) {
      level_.push_back(total);
      total += static_cast<std::size_t>(plan.t - p) * w_;
    }
    buf_.assign(total, 0);
  }

  std::uint64_t run(Vertex x, Vertex y) {
    const int t = plan_.t;
    if (g_.adjacent(x, y) != plan_.pair_adjacent) return 0;
    if (t == 2) return 1;
    Word* cand = buf_.data() + level_[0];
    for (int s = 2; s < t; ++s) {
      Word* r = cand + static_cast<std::size_t>(s - 2) * w_;
      auto rx = plan_.placed.adjacent(0, s) ? g_.row(x) : g_.non_row(x);
      auto ry = plan_.placed.adjacent(1, s) ? g_.row(y) : g_.non_row(y);
      bool live = false;
      for (std::size_t w = 0; w < w_; ++w) {
        r[w] = rx[w] & ry[w];
        live |= r[w] != 0;
      }
      if (!live) return 0;
    }
    return descend(2);
  }

 private:
  std::uint64_t descend(int p) {
    const int t = plan_.t;
    Word* cand = buf_.data() + level_[p - 2];
    if (p == t - 1) return popcount(std::span<const Word>(cand, w_));
    Word* next = buf_.data() + level_[p - 1];
    std::uint64_t total = 0;
    for (std::size_t wi = 0; wi < w_; ++wi) {
      Word bits = cand[wi];
      while (bits) {
        const auto v = static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        auto rv = g_.row(v);
        auto nv = g_.non_row(v);
        bool dead = false;
        for (int s = p + 1; s < t && !dead; ++s) {
          const Word* src = cand + static_cast<std::size_t>(s - p) * w_;
          Word* dst = next + static_cast<std::size_t>(s - p - 1) * w_;
          auto rel = plan_.placed.adjacent(p, s) ? rv : nv;
          Word live = 0;
          for (std::size_t w = 0; w < w_; ++w) {
            dst[w] = src[w] & rel[w];
            live |= dst[w];
          }
          dead = live == 0;
        }
        if (!dead) total += descend(p + 1);
      }
    }
    return total;
  }

  const Graph& g_;
  const EmbedPlan& plan_;
  std::size_t w_;
  std::vector<std::size_t> level_;
  std::vector<Word> buf_;
};

}  // namespace

std::uint64_t embeddings_at(const Graph& g, const EmbedPlan& plan, Vertex x, Vertex y) {
  if (x == y || x >= g.order() || y >= g.order()) throw GraphError("embeddings_at: invalid pair");
  return Embedder(g, plan).run(x, y);
}

std::uint64_t anchored_count(const Graph& g, const EmbedPlan& plan, Vertex x, Vertex y) {
  return embeddings_at(g, plan, x, y) / plan.automorphisms;
}

std::vector<std::uint64_t> anchored_counts_serial(const Graph& g, const EmbedPlan& plan,
                                                  std::span<const Edge> pairs) {
  std::vector<std::uint64_t> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = anchored_count(g, plan, pairs[i].first, pairs[i].second);
  return out;
}

std::vector<std::uint64_t> anchored_counts(const Graph& g, const EmbedPlan& plan, std::span<const Edge> pairs,
                                           Exec exec) {
  for (const auto& [x, y] : pairs)
    if (x == y || x >= g.order() || y >= g.order()) throw GraphError("anchored_counts: invalid pair");
  std::vector<std::uint64_t> out(pairs.size());
  const auto m = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel num_threads(exec.resolved())
  {
    Embedder emb(g, plan);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < m; ++i) out[i] = emb.run(pairs[i].first, pairs[i].second) / plan.automorphisms;
  }
  return out;
}

// ---------------------------------------------------------------------------
// K4,4 through an edge.

std::uint64_t k44_at_edge(const Graph& g, Vertex x, Vertex y) {
  if (x == y || x >= g.order() || y >= g.order()) throw GraphError("k44_at_edge: invalid pair");
  if (!g.adjacent(x, y)) return 0;
  const std::size_t W = g.words();
  // y's side: coclique {y, b2, b3, b4} inside N(x) \ N[y].
  std::vector<Word> bcand(W), r2(W), r3(W), d1(W), d2(W);
  auto rx = g.row(x), ry = g.row(y), nx = g.non_row(x), ny = g.non_row(y);
  for (std::size_t w = 0; w < W; ++w) bcand[w] = rx[w] & ny[w];
  std::vector<Vertex> d2_list, hit;
  std::uint64_t total = 0;
  for_each_bit(bcand, [&](std::size_t b2) {
    auto r_b2 = g.row(static_cast<Vertex>(b2));
    auto n_b2 = g.non_row(static_cast<Vertex>(b2));
    bool any1 = false;
    for (std::size_t w = 0; w < W; ++w) {
      r2[w] = bcand[w] & n_b2[w];
      d1[w] = ry[w] & r_b2[w] & nx[w];
      any1 |= d1[w] != 0;
    }
    if (!any1) return;
    for_each_bit(r2, [&](std::size_t b3) {
      if (b3 <= b2) return;
      auto r_b3 = g.row(static_cast<Vertex>(b3));
      auto n_b3 = g.non_row(static_cast<Vertex>(b3));
      d2_list.clear();
      for (std::size_t w = 0; w < W; ++w) {
        r3[w] = r2[w] & n_b3[w];
        d2[w] = d1[w] & r_b3[w];
      }
      for_each_bit(d2, [&](std::size_t a) { d2_list.push_back(static_cast<Vertex>(a)); });
      if (d2_list.size() < 3) return;
      for_each_bit(r3, [&](std::size_t b4) {
        if (b4 <= b3) return;
        auto r_b4 = g.row(static_cast<Vertex>(b4));
        hit.clear();
        for (Vertex a : d2_list)
          if (test_bit(r_b4, a)) hit.push_back(a);
        // x's side: coclique {x, a2, a3, a4} with the a's in hit.
        const std::size_t h = hit.size();
        for (std::size_t i = 0; i + 2 < h; ++i)
          for (std::size_t j = i + 1; j + 1 < h; ++j) {
            if (g.adjacent(hit[i], hit[j])) continue;
            for (std::size_t k = j + 1; k < h; ++k)
              if (!g.adjacent(hit[i], hit[k]) && !g.adjacent(hit[j], hit[k])) ++total;
          }
      });
    });
  });
  return total;
}

std::vector<std::uint64_t> k44_counts_serial(const Graph& g, std::span<const Edge> edges) {
  std::vector<std::uint64_t> out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) out[i] = k44_at_edge(g, edges[i].first, edges[i].second);
  return out;
}

std::vector<std::uint64_t> k44_counts(const Graph& g, std::span<const Edge> edges, Exec exec) {
  for (const auto& [x, y] : edges)
    if (x == y || x >= g.order() || y >= g.order()) throw GraphError("k44_counts: invalid pair");
  std::vector<std::uint64_t> out(edges.size());
  const auto m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.resolved())
  for (std::int64_t i = 0; i < m; ++i) out[i] = k44_at_edge(g, edges[i].first, edges[i].second);
  return out;
}

}  // namespace gqt
