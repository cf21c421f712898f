#include "gqt/formulas.hpp"

#include <regex>

#include "gqt/kernels.hpp"

namespace gqt {

namespace {

struct Order5Name {
  FormulaFamily family;
  const char* name;
  const char* label;
};

constexpr Order5Name kOrder5[] = {
    {FormulaFamily::kType0, "type0", "0"},    {FormulaFamily::kType1a, "type1a", "1a"},
    {FormulaFamily::kType1b, "type1b", "1b"}, {FormulaFamily::kType2a, "type2a", "2a"},
    {FormulaFamily::kType2b, "type2b", "2b"}, {FormulaFamily::kType2c, "type2c", "2c"},
    {FormulaFamily::kType3a, "type3a", "3a"}, {FormulaFamily::kType3b, "type3b", "3b"},
};

char attach_char(Attach a) { return a == Attach::kFull ? 'F' : a == Attach::kOne ? '1' : '0'; }

Attach attach_of(char c) {
  switch (c) {
    case 'F': return Attach::kFull;
    case '1': return Attach::kOne;
    case '0': return Attach::kZero;
  }
  throw FormulaError(std::string("bad attachment letter: ") + c);
}

// Full > One > Zero; only dx >= dy is a valid key.
int rank(Attach a) { return a == Attach::kFull ? 2 : a == Attach::kOne ? 1 : 0; }

std::uint64_t binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void validate(const FormulaId& id) {
  if (id.family == FormulaFamily::kCompleteS) {
    if (rank(id.dx) < rank(id.dy)) throw FormulaError("completeS: key must have dx >= dy");
    if (id.same_z && !(id.dx == Attach::kOne && id.dy == Attach::kOne))
      throw FormulaError("completeS: the same-z flag applies to case (1,1) only");
    // For |S| = 1 "all of S" and "one vertex of S" coincide.
    if (id.m < 2 || id.m > kMaxSmallOrder - 2) throw FormulaError("completeS: |S| must be in 2..8");
  } else if (id.family == FormulaFamily::kApex) {
    if (id.m < 2 || id.m > kMaxSmallOrder - 4) throw FormulaError("apex: clique size must be in 2..6");
  }
}

}  // namespace

FormulaId FormulaId::complete_s(Attach dx, Attach dy, int m, bool same_z) {
  FormulaId id;
  id.family = FormulaFamily::kCompleteS;
  id.dx = dx;
  id.dy = dy;
  id.m = m;
  id.same_z = same_z;
  validate(id);
  return id;
}

FormulaId FormulaId::apex(int m) {
  FormulaId id;
  id.family = FormulaFamily::kApex;
  id.m = m;
  validate(id);
  return id;
}

std::string FormulaId::name() const {
  for (const auto& e : kOrder5)
    if (e.family == family) return e.name;
  if (family == FormulaFamily::kApex) return "apex/" + std::to_string(m);
  std::string key{attach_char(dx), attach_char(dy)};
  if (dx == Attach::kOne && dy == Attach::kOne) key += same_z ? 's' : 'd';
  return "completeS/" + key + "/" + std::to_string(m);
}

FormulaId FormulaId::parse(const std::string& text) {
  for (const auto& e : kOrder5)
    if (text == e.name) {
      FormulaId id;
      id.family = e.family;
      return id;
    }
  static const std::regex complete_re(R"(completeS/([F10])([F10])([sd]?)/(\d+))");
  static const std::regex apex_re(R"(apex/(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, complete_re)) {
    const Attach dx = attach_of(m[1].str()[0]), dy = attach_of(m[2].str()[0]);
    const bool one_one = dx == Attach::kOne && dy == Attach::kOne;
    if (one_one == m[3].str().empty()) throw FormulaError("completeS: case 11 needs s or d, other cases none");
    return complete_s(dx, dy, std::stoi(m[4].str()), m[3].str() == "s");
  }
  if (std::regex_match(text, m, apex_re)) return apex(std::stoi(m[1].str()));
  throw FormulaError("unknown formula id: " + text);
}

std::vector<FormulaId> order5_formulas() {
  std::vector<FormulaId> out;
  for (const auto& e : kOrder5) {
    FormulaId id;
    id.family = e.family;
    out.push_back(id);
  }
  return out;
}

std::vector<FormulaId> complete_s_formulas(int m_lo, int m_hi) {
  std::vector<FormulaId> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    out.push_back(FormulaId::complete_s(Attach::kFull, Attach::kFull, m));
    out.push_back(FormulaId::complete_s(Attach::kFull, Attach::kOne, m));
    out.push_back(FormulaId::complete_s(Attach::kFull, Attach::kZero, m));
    out.push_back(FormulaId::complete_s(Attach::kOne, Attach::kOne, m, false));
    out.push_back(FormulaId::complete_s(Attach::kOne, Attach::kOne, m, true));
    out.push_back(FormulaId::complete_s(Attach::kOne, Attach::kZero, m));
    out.push_back(FormulaId::complete_s(Attach::kZero, Attach::kZero, m));
  }
  return out;
}

std::uint64_t expected_count(const FormulaId& id, int s, int t, bool adjacent) {
  if (s < 1 || t < 1) throw FormulaError("expected_count: s and t must be positive");
  validate(id);
  const long long S = s, T = t;
  switch (id.family) {
    case FormulaFamily::kType0: return adjacent ? binom(S - 1, 3) : 0;
    case FormulaFamily::kType2a: return adjacent ? 0 : static_cast<std::uint64_t>(T + 1) * binom(S - 1, 2);
    case FormulaFamily::kType3a:
      return adjacent ? static_cast<std::uint64_t>(T) * binom(S, 3) : static_cast<std::uint64_t>(T + 1) * binom(S - 1, 3);
    case FormulaFamily::kType1a:
    case FormulaFamily::kType1b:
    case FormulaFamily::kType2b:
    case FormulaFamily::kType2c:
    case FormulaFamily::kType3b: return 0;  // each contains an induced K4 - e
    default: break;
  }
  if (T != S * S) throw FormulaError("expected_count: " + id.name() + " is defined for GQ(s, s^2) only");
  const long long s2 = S * S, mu = T + 1, lines = (T + 1) * (S * T + 1), m = id.m;
  auto u = [](long long v) {
    if (v < 0) throw FormulaError("expected_count: negative line count");
    return static_cast<std::uint64_t>(v);
  };
  if (id.family == FormulaFamily::kApex) return adjacent ? u(static_cast<long long>(binom(S - 1, 2)) * (S - 3) * s2) * binom(S, m - 1) : 0;

  using A = Attach;
  const A dx = id.dx, dy = id.dy;
  if (dx == A::kFull && dy == A::kFull) return adjacent ? binom(S - 1, m) : 0;
  // y adjacent to x and to a vertex of S on the line of x would give K4 - e.
  if (dx == A::kFull && dy == A::kOne) return adjacent ? 0 : u(s2 + 1) * binom(S - 1, m - 1);
  if (dx == A::kFull && dy == A::kZero) return adjacent ? u(s2) * binom(S, m) : u(s2 + 1) * binom(S - 1, m);
  if (dx == A::kOne && dy == A::kOne) {
    if (id.same_z) return adjacent ? u(s2 * (S - 1)) * binom(S, m - 1) : u(mu * (s2 - 1)) * binom(S, m - 1);
    return adjacent ? u(s2 * s2 * S) * binom(S - 1, m - 2) : u(s2 * (s2 + 1) * (S - 1)) * binom(S - 1, m - 2);
  }
  if (dx == A::kOne && dy == A::kZero)
    return adjacent ? u(s2 * S * s2) * binom(S - 1, m - 1) : u((s2 + 1) * (S - 1) * s2) * binom(S - 1, m - 1);
  if (dx == A::kZero && dy == A::kZero) {
    if (adjacent) {
      const long long l2 = s2 * (S - 1), l3 = lines - 1 - 2 * s2 - l2;
      return u(l2) * binom(S, m) + u(l3) * binom(S - 1, m);
    }
    const long long l1 = mu * (s2 - 1), l2 = lines - l1 - 2 * (s2 + 1);
    return u(l1) * binom(S, m) + u(l2) * binom(S - 1, m);
  }
  throw FormulaError("expected_count: undefined case " + id.name());
}

GraphType formula_type(const FormulaId& id, bool adjacent) {
  validate(id);
  for (const auto& e : kOrder5)
    if (e.family == id.family) return order5_type(e.label, adjacent);

  SmallGraph g;
  if (id.family == FormulaFamily::kApex) {
    // x=0, y=1, w=2, z=3 on a line with the apex 4; clique 4..m+3.
    g.n = id.m + 4;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (!(i == 0 && j == 1)) g.set_edge(i, j);
    for (int i = 4; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) g.set_edge(i, j);
  } else {
    // S = slots 2..m+1; z_x = slot 2, z_y = slot 2 or 3.
    g.n = id.m + 2;
    for (int i = 2; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) g.set_edge(i, j);
    auto attach = [&](int fixed, Attach a, int z) {
      if (a == Attach::kFull)
        for (int i = 2; i < g.n; ++i) g.set_edge(fixed, i);
      else if (a == Attach::kOne)
        g.set_edge(fixed, z);
    };
    attach(0, id.dx, 2);
    attach(1, id.dy, id.same_z || id.dx != Attach::kOne ? 2 : 3);
  }
  if (adjacent) g.set_edge(0, 1);
  return GraphType::from_graph(g, id.name());
}

namespace {

std::vector<Edge> sample(const std::vector<Edge>& all, std::size_t limit) {
  if (limit == 0 || all.size() <= limit) return all;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < limit; ++i) out.push_back(all[i * all.size() / limit]);
  return out;
}

}  // namespace

FormulaReport verify_formula(const PartialLinearSpace& gq, const FormulaId& id, const VerifyOptions& opts) {
  const PlsCheck pls = validate_pls(gq);
  if (!pls.ok()) throw FormulaError("verify_formula: not a partial linear space: " + pls.witness->describe());
  if (check_gq_axiom(gq)) throw FormulaError("verify_formula: geometry fails the GQ axiom");
  FormulaReport rep;
  rep.id = id;
  rep.order = *pls.order;
  const int s = rep.order.s, t = rep.order.t;
  rep.expected_edge = expected_count(id, s, t, true);
  rep.expected_non_edge = expected_count(id, s, t, false);

  const Graph g = point_graph(gq);
  std::vector<Edge> edges, non_edges;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y) (g.adjacent(x, y) ? edges : non_edges).push_back({x, y});
  edges = sample(edges, opts.max_pairs_per_class);
  non_edges = sample(non_edges, opts.max_pairs_per_class);

  // Mismatches are collected in pair order: all edges, then all non-edges.
  for (bool adjacent : {true, false}) {
    const auto& list = adjacent ? edges : non_edges;
    const std::uint64_t expected = adjacent ? rep.expected_edge : rep.expected_non_edge;
    const EmbedPlan plan = EmbedPlan::make(formula_type(id, adjacent).base);
    const auto counts = anchored_counts(g, plan, list, opts.exec);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (counts[i] == expected) continue;
      ++rep.mismatch_count;
      if (rep.mismatches.size() < 10) rep.mismatches.push_back({list[i], adjacent, expected, counts[i]});
    }
    (adjacent ? rep.edges_checked : rep.non_edges_checked) = list.size();
  }
  return rep;
}

}  // namespace gqt
