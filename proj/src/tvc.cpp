#include "gqt/tvc.hpp"

#include <algorithm>
#include <stdexcept>

#include "first_diff.hpp"
#include "gqt/kernels.hpp"
#include "gqt/regularity.hpp"

namespace gqt {

const char* to_string(TvcStatus s) {
  switch (s) {
    case TvcStatus::kSatisfied: return "satisfied";
    case TvcStatus::kViolated: return "violated";
    case TvcStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string TvcMode::describe() const {
  return kind == Kind::kExhaustive ? "exhaustive" : "reduced(" + std::to_string(k) + ")";
}

Fingerprint pair_fingerprint(const Graph& g, int t, Vertex x, Vertex y) {
  if (t < 2 || t > TypeTable::kMaxLookupOrder) throw GraphError("pair_fingerprint: t must be in 2..7");
  if (x == y || x >= g.order() || y >= g.order()) throw GraphError("pair_fingerprint: invalid pair");
  const TypeTable& table = TypeTable::get(t);
  std::vector<std::uint64_t> counts(table.size());
  fingerprint_pair(g, table, x, y, counts);
  Fingerprint fp;
  fp.adjacent = g.adjacent(x, y);
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c]) fp.counts[table.code(c)] = counts[c];
  return fp;
}

std::uint64_t count_type_anchored(const Graph& g, const GraphType& ty, Vertex x, Vertex y) {
  if (x == y || x >= g.order() || y >= g.order()) throw GraphError("count_type_anchored: invalid pair");
  if (g.adjacent(x, y) != ty.pair_adjacent())
    throw GraphError("count_type_anchored: pair adjacency does not match the type");
  return anchored_count(g, EmbedPlan::make(ty.base), x, y);
}

namespace {

struct PairLists {
  std::vector<Edge> edges, non_edges, all;
};

PairLists pair_lists(const Graph& g) {
  PairLists p;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y) {
      (g.adjacent(x, y) ? p.edges : p.non_edges).push_back({x, y});
      p.all.push_back({x, y});
    }
  return p;
}

// Fixed chunking keeps every reported counter independent of the thread count.
constexpr std::size_t kPairChunk = 64;
constexpr std::size_t kEdgeChunk = 16;

// Recount a witness by the anchored route before reporting it.
void recheck(const Graph& g, const TvcWitness& w) {
  if (!w.type) return;
  const std::uint64_t a = count_type_anchored(g, *w.type, w.first.first, w.first.second);
  const std::uint64_t b = count_type_anchored(g, *w.type, w.second.first, w.second.second);
  if (a != w.first_count || b != w.second_count || a == b)
    throw std::logic_error("t-vertex witness failed its independent recount");
}

enum class LevelResult { kHolds, kViolated, kOutOfTime };

LevelResult exhaustive_level(const Graph& g, int level, const PairLists& pairs, const TvcOptions& opts,
                             TvcVerdict& verdict) {
  const TypeTable& table = TypeTable::get(level);
  std::vector<std::size_t> swapped(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) swapped[c] = table.index_of(swap_pair(table.code(c)));

  std::optional<std::pair<Edge, std::vector<std::uint64_t>>> ref[2];
  const std::size_t step = kPairChunk;
  for (std::size_t begin = 0; begin < pairs.all.size(); begin += step) {
    if (opts.deadline.expired()) return LevelResult::kOutOfTime;
    const std::size_t end = std::min(pairs.all.size(), begin + step);
    const std::span<const Edge> chunk(pairs.all.data() + begin, end - begin);
    const auto fps = fingerprints(g, table, chunk, opts.exec);
    verdict.pairs_scanned += chunk.size();
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const Edge pair = chunk[i];
      const auto& fp = fps[i];
      auto& r = ref[g.adjacent(pair.first, pair.second)];
      TvcWitness w;
      w.level = level;
      if (!r) {
        r.emplace(pair, fp);
        // (x,y) and (y,x) lie in the same class; the swapped count must agree.
        for (std::size_t c = 0; c < fp.size(); ++c) {
          if (fp[c] == fp[swapped[c]]) continue;
          w.type = GraphType::from_code(table.code(c));
          w.first = pair;
          w.second = {pair.second, pair.first};
          w.first_count = fp[c];
          w.second_count = fp[swapped[c]];
          break;
        }
      } else {
        const auto& rv = r->second;
        for (std::size_t c = 0; c < fp.size(); ++c) {
          if (fp[c] == rv[c]) continue;
          w.type = GraphType::from_code(table.code(c));
          w.first = r->first;
          w.second = pair;
          w.first_count = rv[c];
          w.second_count = fp[c];
          break;
        }
      }
      if (w.type) {
        recheck(g, w);
        verdict.witness = std::move(w);
        return LevelResult::kViolated;
      }
    }
  }
  verdict.types_checked += table.size();
  return LevelResult::kHolds;
}

LevelResult reduced_level(const Graph& g, int level, const std::vector<GraphType>& types, const PairLists& pairs,
                          const TvcOptions& opts, std::uint64_t& types_checked, std::uint64_t& pairs_scanned,
                          std::optional<TvcWitness>& witness) {
  std::map<CanonicalCode, std::pair<Edge, std::uint64_t>> constant;
  const std::size_t step = kPairChunk;
  for (const auto& ty : types) {
    const auto& list = ty.pair_adjacent() ? pairs.edges : pairs.non_edges;
    if (list.empty()) {
      ++types_checked;
      continue;
    }
    const EmbedPlan plan = EmbedPlan::make(ty.base);
    detail::FirstDiff<Edge> track;
    for (std::size_t begin = 0; begin < list.size() && !track.has_diff; begin += step) {
      if (opts.deadline.expired()) return LevelResult::kOutOfTime;
      const std::size_t end = std::min(list.size(), begin + step);
      const std::span<const Edge> chunk(list.data() + begin, end - begin);
      const auto counts = anchored_counts(g, plan, chunk, opts.exec);
      pairs_scanned += chunk.size();
      for (std::size_t i = 0; i < chunk.size(); ++i) track.see(chunk[i], counts[i]);
    }
    ++types_checked;
    TvcWitness w;
    w.level = level;
    if (track.has_diff) {
      w.type = ty;
      w.first = track.first_key;
      w.second = track.diff_key;
      w.first_count = track.first_val;
      w.second_count = track.diff_val;
    } else {
      const CanonicalCode other = swap_pair(ty.code);
      auto it = constant.find(other);
      if (other != ty.code && it != constant.end() && it->second.second != track.first_val) {
        // Count of ty at (y,x) equals the count of the swapped type at (x,y).
        w.type = ty;
        w.first = track.first_key;
        w.second = {track.first_key.second, track.first_key.first};
        w.first_count = track.first_val;
        w.second_count = it->second.second;
      }
      constant[ty.code] = {track.first_key, track.first_val};
    }
    if (w.type) {
      recheck(g, w);
      witness = std::move(w);
      return LevelResult::kViolated;
    }
  }
  return LevelResult::kHolds;
}

std::vector<GraphType> reduced_types(int level, int k) {
  if (k + 1 > level - 1) return {};
  return enumerate_types(level, k + 1);
}

}  // namespace

TvcVerdict check_tvc(const Graph& g, int t, TvcMode mode, const TvcOptions& opts) {
  const bool exhaustive = mode.kind == TvcMode::Kind::kExhaustive;
  if (t < 2 || t > 8) throw GraphError("check_tvc: t must be in 2..8");
  if (exhaustive && t > TypeTable::kMaxLookupOrder) throw GraphError("check_tvc: exhaustive mode supports t <= 7");
  TvcVerdict verdict;
  verdict.t = t;

  if (!check_regular(g)) {
    TvcWitness w;
    w.level = 2;
    Vertex v = 1;
    while (g.degree(v) == g.degree(0)) ++v;
    w.first = {0, 0};
    w.second = {v, v};
    w.first_count = g.degree(0);
    w.second_count = g.degree(v);
    verdict.witness = w;
    verdict.status = TvcStatus::kViolated;
    verdict.verified_level = 1;
    return verdict;
  }
  verdict.verified_level = 2;

  if (!exhaustive) {
    if (mode.k < 1 || mode.k > 3) throw GraphError("check_tvc: reduced mode needs 1 <= k <= 3");
    if (!check_isoregular(g, mode.k, opts.exec).passed())
      throw GraphError("check_tvc: reduced mode requires a " + std::to_string(mode.k) + "-isoregular graph");
  }

  const PairLists pairs = pair_lists(g);
  for (int level = 3; level <= t; ++level) {
    LevelResult r;
    if (exhaustive) {
      r = exhaustive_level(g, level, pairs, opts, verdict);
    } else {
      r = reduced_level(g, level, reduced_types(level, mode.k), pairs, opts, verdict.types_checked,
                        verdict.pairs_scanned, verdict.witness);
    }
    if (r == LevelResult::kViolated) {
      verdict.status = TvcStatus::kViolated;
      return verdict;
    }
    if (r == LevelResult::kOutOfTime) {
      verdict.status = TvcStatus::kInconclusive;
      return verdict;
    }
    verdict.verified_level = level;
  }
  verdict.status = TvcStatus::kSatisfied;
  return verdict;
}

DistinguisherResult find_distinguisher(const Graph& g, int t, int k, const TvcOptions& opts) {
  if (t < 3 || t > 8) throw GraphError("find_distinguisher: t must be in 3..8");
  DistinguisherResult out;
  const TvcVerdict pre = check_tvc(g, t - 1, TvcMode::reduced(k), opts);
  if (pre.status == TvcStatus::kInconclusive) return out;
  if (pre.status == TvcStatus::kViolated)
    throw GraphError("find_distinguisher: graph fails the " + std::to_string(t - 1) + "-vertex condition");
  std::uint64_t scanned = 0;
  const LevelResult r =
      reduced_level(g, t, reduced_types(t, k), pair_lists(g), opts, out.types_checked, scanned, out.witness);
  out.status = r == LevelResult::kViolated   ? TvcStatus::kViolated
               : r == LevelResult::kHolds    ? TvcStatus::kSatisfied
                                             : TvcStatus::kInconclusive;
  return out;
}

K44Census count_k44_per_edge(const Graph& g, bool stop_at_difference, const TvcOptions& opts) {
  K44Census out;
  const std::vector<Edge> edges = g.edges();
  detail::FirstDiff<Edge> track;
  const std::size_t step = kEdgeChunk;
  std::size_t begin = 0;
  for (; begin < edges.size(); begin += step) {
    if (stop_at_difference && track.has_diff) break;
    if (opts.deadline.expired()) break;
    const std::size_t end = std::min(edges.size(), begin + step);
    const std::span<const Edge> chunk(edges.data() + begin, end - begin);
    const auto counts = k44_counts(g, chunk, opts.exec);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      out.counts.emplace_back(chunk[i], counts[i]);
      ++out.histogram[counts[i]];
      track.see(chunk[i], counts[i]);
    }
  }
  out.complete = out.counts.size() == edges.size();
  if (track.has_diff) {
    out.differing = std::array<std::pair<Edge, std::uint64_t>, 2>{
        std::pair{track.first_key, std::uint64_t{track.first_val}},
        std::pair{track.diff_key, std::uint64_t{track.diff_val}}};
    out.status = TvcStatus::kViolated;
  } else if (out.complete) {
    out.status = TvcStatus::kSatisfied;
  }
  return out;
}

}  // namespace gqt
