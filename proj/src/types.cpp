#include "gqt/types.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace gqt {

int GraphType::min_additional_valency() const {
  int best = base.n;
  for (int v = 2; v < base.n; ++v) best = std::min(best, base.degree(v));
  return best;
}

GraphType GraphType::from_graph(const SmallGraph& g, std::string label) {
  if (g.n < 2 || g.n > kMaxSmallOrder) throw GraphError("graph type order must be in 2..10");
  return GraphType{g, canonical_small(g, 2), std::move(label)};
}

GraphType GraphType::from_code(const CanonicalCode& code, std::string label) {
  return GraphType{code.graph(), code, std::move(label)};
}

bool type_order_less(const CanonicalCode& a, const CanonicalCode& b) {
  if (a.edges() != b.edges()) return a.edges() < b.edges();
  return a < b;
}

namespace {

using BitMap = std::array<std::uint8_t, 45>;

// Bit permutations induced by all permutations of vertices 2..t-1.
std::vector<BitMap> additional_permutations(int t) {
  std::vector<int> p(static_cast<std::size_t>(t));
  std::iota(p.begin(), p.end(), 0);
  std::vector<BitMap> out;
  do {
    BitMap bm{};
    for (int j = 1; j < t; ++j)
      for (int i = 0; i < j; ++i)
        bm[pair_index(i, j)] = static_cast<std::uint8_t>(pair_index(p[i], p[j]));
    out.push_back(bm);
  } while (std::next_permutation(p.begin() + 2, p.end()));
  return out;
}

std::uint64_t apply(const BitMap& bm, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    out |= std::uint64_t{1} << bm[b];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

TypeTable::TypeTable(int t) : t_(t) {
  if (t < 2 || t > 8) throw GraphError("type order must be in 2..8");
  std::vector<CanonicalCode> found;
  if (t <= kMaxLookupOrder) {
    const int m = pair_count(t);
    const std::uint64_t n_masks = std::uint64_t{1} << m;
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    lookup_.assign(n_masks, kUnset);
    const auto perms = additional_permutations(t);
    for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
      if (lookup_[mask] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(found.size());
      found.push_back(canonical_small(SmallGraph::from_mask(t, mask), 2));
      for (const auto& bm : perms) lookup_[apply(bm, mask)] = id;
    }
  } else {
    // Every type of order t extends a type of order t-1 by one vertex.
    std::set<CanonicalCode> seen;
    for (const auto& smaller : TypeTable::get(t - 1).classes()) {
      const SmallGraph g = smaller.graph();
      for (std::uint32_t pattern = 0; pattern < (1u << (t - 1)); ++pattern) {
        SmallGraph h = g;
        h.n = t;
        for (int v = 0; v < t - 1; ++v)
          if ((pattern >> v) & 1u) h.set_edge(v, t - 1);
        seen.insert(canonical_small(h, 2));
      }
    }
    found.assign(seen.begin(), seen.end());
  }

  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return type_order_less(found[a], found[b]); });
  std::vector<std::uint32_t> rank(found.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    classes_.push_back(found[order[r]]);
    index_[found[order[r]]] = r;
  }
  for (auto& id : lookup_) id = rank[id];
}

const TypeTable& TypeTable::get(int t) {
  // Recursive: building order 8 asks for order 7 while the lock is held.
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<TypeTable>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return *it->second;
  std::unique_ptr<TypeTable> built(new TypeTable(t));
  auto& slot = cache[t];
  slot = std::move(built);
  return *slot;
}

std::size_t TypeTable::index_of(const CanonicalCode& code) const {
  auto it = index_.find(code);
  return it == index_.end() ? classes_.size() : it->second;
}

std::vector<GraphType> enumerate_types(int t, int min_add_valency) {
  if (t < 2 || t > 8) throw GraphError("enumerate_types: order must be in 2..8");
  if (min_add_valency < 0 || min_add_valency > t - 1)
    throw GraphError("enumerate_types: valency bound must be in 0..t-1");
  std::vector<GraphType> out;
  for (const auto& code : TypeTable::get(t).classes()) {
    GraphType ty = GraphType::from_code(code);
    if (ty.min_additional_valency() >= min_add_valency) out.push_back(std::move(ty));
  }
  return out;
}

std::vector<std::vector<GraphType>> group_type_shapes(const std::vector<GraphType>& types) {
  std::map<CanonicalCode, std::size_t> group_of;
  std::vector<std::vector<GraphType>> out;
  for (const auto& ty : types) {
    SmallGraph g = ty.base;
    g.rows[0] &= static_cast<std::uint16_t>(~2u);
    g.rows[1] &= static_cast<std::uint16_t>(~1u);
    const CanonicalCode c = canonical_small(g, 2);
    const CanonicalCode key = std::min(c, swap_pair(c));
    auto [it, fresh] = group_of.emplace(key, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(ty);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order-5 complement enumeration.

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// The 9 possible edges on {x,y,a,b,c} other than xy.
const std::array<std::pair<int, int>, 9>& order5_slots() {
  static const std::array<std::pair<int, int>, 9> slots = [] {
    std::array<std::pair<int, int>, 9> s{};
    int k = 0;
    for (int j = 1; j < 5; ++j)
      for (int i = 0; i < j; ++i)
        if (!(i == 0 && j == 1)) s[k++] = {i, j};
    return s;
  }();
  return slots;
}

int slot_of(int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& slots = order5_slots();
  for (int k = 0; k < 9; ++k)
    if (slots[k] == std::make_pair(i, j)) return k;
  throw GraphError("order5: edge xy is not a slot");
}

std::vector<std::array<int, 5>> order5_group() {
  std::vector<std::array<int, 5>> g;
  std::array<int, 5> p{0, 1, 2, 3, 4};
  for (int swap_xy = 0; swap_xy < 2; ++swap_xy) {
    std::array<int, 3> abc{2, 3, 4};
    do {
      std::array<int, 5> q{};
      q[0] = swap_xy ? 1 : 0;
      q[1] = swap_xy ? 0 : 1;
      q[2] = abc[0];
      q[3] = abc[1];
      q[4] = abc[2];
      g.push_back(q);
    } while (std::next_permutation(abc.begin(), abc.end()));
  }
  (void)p;
  return g;
}

std::uint16_t image_mask(const std::array<int, 5>& perm, std::uint16_t mask) {
  std::uint16_t out = 0;
  const auto& slots = order5_slots();
  for (int k = 0; k < 9; ++k)
    if ((mask >> k) & 1u) out |= static_cast<std::uint16_t>(1u << slot_of(perm[slots[k].first], perm[slots[k].second]));
  return out;
}

std::uint16_t mask_of(const EdgeList& edges) {
  std::uint16_t m = 0;
  for (auto [i, j] : edges) m |= static_cast<std::uint16_t>(1u << slot_of(i, j));
  return m;
}

// Representatives as listed for the classical hand enumeration; x=0 y=1 a=2 b=3 c=4.
const std::vector<std::pair<std::string, EdgeList>>& named_representatives() {
  constexpr int x = 0, y = 1, a = 2, b = 3, c = 4;
  static const std::vector<std::pair<std::string, EdgeList>> reps = {
      {"0", {}},
      {"1a", {{x, a}}},
      {"1b", {{a, b}}},
      {"2a", {{x, a}, {x, b}}},
      {"2b", {{x, a}, {y, b}}},
      {"2c", {{x, a}, {b, c}}},
      {"2d", {{x, a}, {y, a}}},
      {"2e", {{x, a}, {a, b}}},
      {"2f", {{a, b}, {b, c}}},
      {"3a", {{x, a}, {x, b}, {x, c}}},
      {"3b", {{x, a}, {x, b}, {y, c}}},
      {"3c", {{x, a}, {x, b}, {y, a}}},
      {"3d", {{x, a}, {x, b}, {a, b}}},
      {"3e", {{x, a}, {x, b}, {a, c}}},
      {"3f", {{x, a}, {y, a}, {a, b}}},
      {"3g", {{x, a}, {y, a}, {b, c}}},
      {"3h", {{x, a}, {y, b}, {a, b}}},
      {"3i", {{x, a}, {y, b}, {a, c}}},
      {"3j", {{x, a}, {a, b}, {a, c}}},
      {"3k", {{x, a}, {a, b}, {b, c}}},
      {"3l", {{a, b}, {a, c}, {b, c}}},
  };
  return reps;
}

std::uint16_t orbit_min(const std::vector<std::array<int, 5>>& group, std::uint16_t mask) {
  std::uint16_t best = mask;
  for (const auto& g : group) best = std::min(best, image_mask(g, mask));
  return best;
}

}  // namespace

Order5Enumeration enumerate_order5_complements() {
  const auto group = order5_group();
  std::map<std::uint16_t, std::string> label_of;
  for (const auto& [label, edges] : named_representatives())
    label_of[orbit_min(group, mask_of(edges))] = label;

  Order5Enumeration out;
  std::map<std::uint16_t, std::set<std::uint16_t>> orbits;  // orbit min -> members
  for (std::uint16_t mask = 0; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) > 3) continue;
    orbits[orbit_min(group, mask)].insert(mask);
  }
  const auto& slots = order5_slots();
  for (const auto& [rep, members] : orbits) {
    ComplementClass cls;
    cls.size = std::popcount(rep);
    for (int k = 0; k < 9; ++k)
      if ((rep >> k) & 1u) cls.edges.push_back(slots[k]);
    cls.orbit_length = static_cast<int>(members.size());
    cls.aut_order = static_cast<int>(group.size()) / cls.orbit_length;
    auto it = label_of.find(rep);
    cls.label = it == label_of.end() ? "?" : it->second;
    std::array<int, 5> deg{};
    for (auto [i, j] : cls.edges) {
      ++deg[i];
      ++deg[j];
    }
    cls.retained = deg[2] <= 1 && deg[3] <= 1 && deg[4] <= 1;
    out.classes_by_size[cls.size] += 1;
    out.orbit_sum_by_size[cls.size] += cls.orbit_length;
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& l, const auto& r) {
    return std::make_pair(l.size, l.label) < std::make_pair(r.size, r.label);
  });
  return out;
}

GraphType order5_type(const std::string& label, bool pair_adjacent) {
  for (const auto& [name, edges] : named_representatives()) {
    if (name != label) continue;
    const std::uint16_t comp = mask_of(edges);
    SmallGraph g;
    g.n = 5;
    const auto& slots = order5_slots();
    for (int k = 0; k < 9; ++k)
      if (!((comp >> k) & 1u)) g.set_edge(slots[k].first, slots[k].second);
    if (pair_adjacent) g.set_edge(0, 1);
    return GraphType::from_graph(g, label);
  }
  throw GraphError("unknown order-5 type label: " + label);
}

std::vector<GraphType> order5_reduced_types(bool pair_adjacent) {
  std::vector<GraphType> out;
  for (const auto& cls : enumerate_order5_complements().classes)
    if (cls.retained) out.push_back(order5_type(cls.label, pair_adjacent));
  return out;
}

// ---------------------------------------------------------------------------
// Candidate graphs S for a minimal failing type.

namespace {

bool is_clique(const SmallGraph& g, std::uint16_t set) {
  for (int u = 0; u < g.n; ++u) {
    if (!((set >> u) & 1u)) continue;
    for (int v = u + 1; v < g.n; ++v)
      if (((set >> v) & 1u) && !g.adjacent(u, v)) return false;
  }
  return true;
}

bool s_candidate_ok(const SmallGraph& g, int t0) {
  const int n = g.n;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;

  // No clique of size t0-4 (hence none larger and S is not complete).
  std::vector<std::uint16_t> maximal;
  for (std::uint16_t set = 1; set < (1u << n); ++set) {
    if (!is_clique(g, set)) continue;
    if (std::popcount(set) >= t0 - 4) return false;
    bool is_max = true;
    for (int z = 0; z < n && is_max; ++z)
      if (!((set >> z) & 1u) && (g.rows[z] & set) == set) is_max = false;
    if (is_max) maximal.push_back(set);
  }
  // A vertex outside a maximal clique sees at most one of its vertices.
  for (std::uint16_t c : maximal)
    for (int z = 0; z < n; ++z)
      if (!((c >> z) & 1u) && std::popcount(static_cast<std::uint16_t>(g.rows[z] & c)) > 1) return false;

  std::uint16_t deg2 = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 2) deg2 |= static_cast<std::uint16_t>(1u << v);
  bool deg2_empty = true;
  for (int v = 0; v < n; ++v)
    if (((deg2 >> v) & 1u) && (g.rows[v] & deg2)) deg2_empty = false;
  const bool deg2_complete = is_clique(g, deg2);

  // x ~ y: valency-2 vertices are all adjacent to x and y, hence a clique of size <= 3.
  const bool adjacent_ok = deg2_complete && std::popcount(deg2) <= 3;
  // x !~ y: valency-2 vertices form a coclique; at least two vertices have
  // valency >= 3; a valency-3 vertex sees at most one valency-2 vertex.
  bool nonadjacent_ok = deg2_empty;
  if (nonadjacent_ok) {
    int big = 0;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) >= 3) ++big;
      if (g.degree(v) == 3 && std::popcount(static_cast<std::uint16_t>(g.rows[v] & deg2)) > 1)
        nonadjacent_ok = false;
    }
    if (big < 2) nonadjacent_ok = false;
  }
  return adjacent_ok || nonadjacent_ok;
}

}  // namespace

std::vector<Graph> enumerate_s_candidates(int t0) {
  if (t0 < 6 || t0 > 8) throw GraphError("enumerate_s_candidates: t0 must be in 6..8");
  const int n = t0 - 2;
  const int m = pair_count(n);
  std::map<CanonicalCode, SmallGraph> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const SmallGraph g = SmallGraph::from_mask(n, mask);
    if (!s_candidate_ok(g, t0)) continue;
    const CanonicalCode code = canonical_small(g, 0);
    found.emplace(code, code.graph());
  }
  std::vector<Graph> out;
  for (const auto& [code, g] : found) out.push_back(g.to_graph());
  return out;
}

}  // namespace gqt
