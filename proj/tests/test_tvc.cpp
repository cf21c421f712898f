#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "gqt/formulas.hpp"
#include "gqt/kernels.hpp"
#include "gqt/regularity.hpp"
#include "gqt/tvc.hpp"

using namespace gqt;
using gqt::testing::binomial;
using gqt::testing::gq;
using gqt::testing::random_graph;

namespace {

Graph from_list(std::size_t n, std::vector<Edge> e) { return graph_from_edges(n, e); }

std::vector<GraphType> concat(std::vector<GraphType> a, const std::vector<GraphType>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int highest_isoregular(const Graph& g) {
  for (int k = 3; k >= 1; --k)
    if (check_isoregular(g, k).passed()) return k;
  return 0;
}

}  // namespace

TEST_CASE("type enumeration counts") {
  CHECK(enumerate_types(2, 0).size() == 2);
  CHECK(enumerate_types(3, 0).size() == 8);
  // Orbits of the 64 labelled graphs on 4 vertices under swapping 2 and 3:
  // (64 + 16) / 2 by Burnside.
  CHECK(enumerate_types(4, 0).size() == 40);
  CHECK(TypeTable::get(4).size() == 40);
  CHECK_THROWS_AS(enumerate_types(9, 0), GraphError);
  CHECK_THROWS_AS(enumerate_types(1, 0), GraphError);

  const auto t = enumerate_types(5, 0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(type_order_less(t[i - 1].code, t[i].code));
}

TEST_CASE("order-5 types with additional valency >= 3 form the eight shapes of the retained classes") {
  const auto types = enumerate_types(5, 3);
  CHECK(types.size() == 26);
  for (const auto& ty : types) CHECK(ty.min_additional_valency() >= 3);
  const auto shapes = group_type_shapes(types);
  CHECK(shapes.size() == 8);

  const auto retained = concat(order5_reduced_types(true), order5_reduced_types(false));
  CHECK(retained.size() == 16);
  CHECK(group_type_shapes(retained).size() == 8);
  CHECK(group_type_shapes(concat(types, retained)).size() == 8);
}

TEST_CASE("order-5 complement enumeration checksums") {
  const Order5Enumeration e = enumerate_order5_complements();
  CHECK(e.classes_by_size.at(1) == 2);
  CHECK(e.classes_by_size.at(2) == 6);
  CHECK(e.classes_by_size.at(3) == 12);
  CHECK(e.orbit_sum_by_size.at(1) == 9);
  CHECK(e.orbit_sum_by_size.at(2) == 36);
  CHECK(e.orbit_sum_by_size.at(3) == 84);
  std::multiset<int> size1;
  std::set<std::string> retained;
  for (const auto& c : e.classes) {
    if (c.size == 1) size1.insert(c.orbit_length);
    CHECK(c.orbit_length * c.aut_order == 12);
    if (c.retained) retained.insert(c.label);
  }
  CHECK(size1 == std::multiset<int>{3, 6});
  CHECK(retained == std::set<std::string>{"0", "1a", "1b", "2a", "2b", "2c", "3a", "3b"});
}

TEST_CASE("S candidates") {
  CHECK(enumerate_s_candidates(6).empty());
  CHECK(enumerate_s_candidates(7).empty());
  const auto found = enumerate_s_candidates(8);
  std::set<CanonicalCode> got;
  for (const auto& g : found) got.insert(canonical_code(g));
  const Graph prism = from_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const Graph prism_minus = from_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 4}, {2, 5}});
  const Graph k33 = complete_bipartite(3, 3);
  std::vector<Edge> k33e_edges = k33.edges();
  k33e_edges.pop_back();
  const std::set<CanonicalCode> expected{canonical_code(k33), canonical_code(complete_bipartite(4, 2)),
                                         canonical_code(graph_from_edges(6, k33e_edges)), canonical_code(prism),
                                         canonical_code(prism_minus)};
  CHECK(found.size() == 5);
  CHECK(got == expected);
  CHECK_THROWS_AS(enumerate_s_candidates(9), GraphError);
}

TEST_CASE("pair fingerprints") {
  const Graph k5 = complete_graph(5);
  const Fingerprint f = pair_fingerprint(k5, 3, 0, 1);
  CHECK(f.adjacent);
  REQUIRE(f.counts.size() == 1);
  CHECK(f.counts.begin()->second == 3);
  CHECK(f.counts.begin()->first == canonical_code(complete_graph(3), std::pair<Vertex, Vertex>{0, 1}));

  const Graph& g = gq("w2").graph;
  std::optional<Fingerprint> by_class[2];
  bool constant = true;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = 0; y < g.order(); ++y) {
      if (x == y) continue;
      const Fingerprint fp = pair_fingerprint(g, 4, x, y);
      auto& ref = by_class[g.adjacent(x, y)];
      if (!ref) ref = fp;
      constant = constant && ref->counts == fp.counts;
    }
  CHECK(constant);
  CHECK(by_class[0]->counts != by_class[1]->counts);
  CHECK_THROWS_AS(pair_fingerprint(g, 8, 0, 1), GraphError);
  CHECK_THROWS_AS(pair_fingerprint(g, 4, 2, 2), GraphError);
}

TEST_CASE("fingerprints sum to C(n-2, t-2) and swap with the pair") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 4 + rng() % 14;
    const Graph g = random_graph(n, 0.45, rng);
    const int t = 3 + rep % 4;
    const Vertex x = rng() % n;
    Vertex y = rng() % n;
    if (y == x) y = (x + 1) % n;
    const Fingerprint a = pair_fingerprint(g, t, x, y);
    const Fingerprint b = pair_fingerprint(g, t, y, x);
    std::uint64_t total = 0;
    std::map<CanonicalCode, std::uint64_t> swapped;
    for (const auto& [code, c] : a.counts) {
      total += c;
      swapped[swap_pair(code)] += c;
    }
    CHECK(total == binomial(n - 2, t - 2));
    CHECK(swapped == b.counts);
  }
}

TEST_CASE("anchored counts agree with the exhaustive fingerprint (120 random instances)") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const std::size_t n = 5 + rng() % 16;
    const Graph g = random_graph(n, 0.3 + 0.1 * (rep % 5), rng);
    const int t = 3 + rep % 5;
    const Vertex x = rng() % n;
    Vertex y = rng() % n;
    if (y == x) y = (x + 1) % n;
    const Fingerprint fp = pair_fingerprint(g, t, x, y);
    const TypeTable& table = TypeTable::get(t);
    // One class seen at the pair (when any) and one drawn at random.
    std::vector<CanonicalCode> probe;
    if (!fp.counts.empty()) {
      auto it = fp.counts.begin();
      std::advance(it, rng() % fp.counts.size());
      probe.push_back(it->first);
    }
    probe.push_back(table.code(rng() % table.size()));
    for (const auto& code : probe) {
      const GraphType ty = GraphType::from_code(code);
      if (ty.pair_adjacent() != g.adjacent(x, y)) {
        CHECK_THROWS_AS(count_type_anchored(g, ty, x, y), GraphError);
        continue;
      }
      const auto it = fp.counts.find(code);
      CHECK(count_type_anchored(g, ty, x, y) == (it == fp.counts.end() ? 0 : it->second));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("t-vertex condition: small verdicts") {
  const TvcVerdict c6 = check_tvc(cycle_graph(6), 3, TvcMode::exhaustive());
  CHECK(c6.status == TvcStatus::kViolated);
  REQUIRE(c6.witness.has_value());
  CHECK(c6.witness->level == 3);
  CHECK(c6.verified_level == 2);

  std::vector<Edge> p3{{0, 1}, {1, 2}};
  const TvcVerdict path = check_tvc(graph_from_edges(3, p3), 3, TvcMode::exhaustive());
  CHECK(path.status == TvcStatus::kViolated);
  CHECK(path.witness->level == 2);
  CHECK_FALSE(path.witness->type.has_value());

  CHECK(check_tvc(complete_graph(6), 5, TvcMode::exhaustive()).status == TvcStatus::kSatisfied);
  CHECK(check_tvc(gqt::testing::petersen(), 5, TvcMode::exhaustive()).status == TvcStatus::kSatisfied);

  CHECK_THROWS_AS(check_tvc(cycle_graph(5), 8, TvcMode::exhaustive()), GraphError);
  CHECK_THROWS_AS(check_tvc(cycle_graph(5), 1, TvcMode::exhaustive()), GraphError);
  CHECK_THROWS_AS(check_tvc(cycle_graph(6), 4, TvcMode::reduced(2)), GraphError);
  CHECK_THROWS_AS(check_tvc(cycle_graph(5), 4, TvcMode::reduced(4)), GraphError);
}

TEST_CASE("t-vertex condition on quadrangles") {
  const TvcVerdict w2 = check_tvc(gq("w2").graph, 5, TvcMode::exhaustive());
  CHECK(w2.status == TvcStatus::kSatisfied);
  CHECK(w2.verified_level == 5);

  CHECK(check_tvc(gq("t2star", true).graph, 5, TvcMode::reduced(2)).status == TvcStatus::kSatisfied);
  CHECK(check_tvc(gq("q5_2").graph, 7, TvcMode::reduced(3)).status == TvcStatus::kSatisfied);
}

TEST_CASE("reduced and exhaustive verdicts agree on small graphs") {
  std::vector<Graph> graphs{cycle_graph(5),       gqt::testing::petersen(), gqt::testing::shrikhande(),
                            gqt::testing::rook(4), gqt::testing::rook(3),    gqt::testing::paley(13),
                            gqt::testing::paley(17), gq("w2").graph,         gq("q5_2").graph,
                            complement(gq("q5_2").graph)};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CAPTURE(i);
    const Graph& g = graphs[i];
    const int k = highest_isoregular(g);
    REQUIRE(k >= 1);
    for (int t = 3; t <= 5; ++t) {
      const TvcVerdict ex = check_tvc(g, t, TvcMode::exhaustive());
      const TvcVerdict red = check_tvc(g, t, TvcMode::reduced(k));
      CAPTURE(t);
      CHECK(ex.status == red.status);
      CHECK(ex.verified_level == red.verified_level);
      if (red.witness && red.witness->type) CHECK(red.witness->type->min_additional_valency() >= k + 1);
    }
  }
}

TEST_CASE("t-vertex condition is monotone in t") {
  std::vector<Graph> graphs{gqt::testing::shrikhande(), gqt::testing::rook(4), gqt::testing::paley(13),
                            gq("w2").graph, gq("q5_2").graph};
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) graphs.push_back(random_graph(9 + i, 0.5, rng));
  for (const auto& g : graphs) {
    TvcStatus prev = TvcStatus::kSatisfied;
    for (int t = 2; t <= 6; ++t) {
      const TvcVerdict v = check_tvc(g, t, TvcMode::exhaustive());
      if (v.status == TvcStatus::kSatisfied) CHECK(prev == TvcStatus::kSatisfied);
      CHECK(v.verified_level >= (v.status == TvcStatus::kSatisfied ? t : 1));
      prev = v.status;
    }
  }
}

TEST_CASE("witnesses are reproducible from the anchored count") {
  const Graph g = gqt::testing::shrikhande();
  const TvcVerdict v = check_tvc(g, 4, TvcMode::exhaustive());
  REQUIRE(v.status == TvcStatus::kViolated);
  const auto& w = *v.witness;
  REQUIRE(w.type.has_value());
  CHECK(g.adjacent(w.first.first, w.first.second) == g.adjacent(w.second.first, w.second.second));
  CHECK(count_type_anchored(g, *w.type, w.first.first, w.first.second) == w.first_count);
  CHECK(count_type_anchored(g, *w.type, w.second.first, w.second.second) == w.second_count);
  CHECK(w.first_count != w.second_count);
}

TEST_CASE("find_distinguisher") {
  const DistinguisherResult shr = find_distinguisher(gqt::testing::shrikhande(), 4, 2);
  CHECK(shr.status == TvcStatus::kViolated);
  REQUIRE(shr.witness.has_value());
  CHECK(shr.witness->type->min_additional_valency() >= 3);

  CHECK(find_distinguisher(gq("w2").graph, 6, 2).status == TvcStatus::kSatisfied);
  CHECK(find_distinguisher(gq("q5_2").graph, 7, 3).status == TvcStatus::kSatisfied);
  // Shrikhande already fails at 4.
  CHECK_THROWS_AS(find_distinguisher(gqt::testing::shrikhande(), 5, 2), GraphError);
  CHECK_THROWS_AS(find_distinguisher(gq("w2").graph, 5, 3), GraphError);
}

TEST_CASE("anchored counts on quadrangles") {
  const Graph& g = gq("q5_3").graph;
  const auto e = g.edges().front();
  CHECK(count_type_anchored(g, formula_type(FormulaId::parse("type3a"), true), e.first, e.second) == 9);
  Vertex y = 1;
  while (g.adjacent(0, y)) ++y;
  CHECK(count_type_anchored(g, formula_type(FormulaId::parse("type0"), false), 0, y) == 0);
}

TEST_CASE("types containing K4-e never occur in a K4-e-free graph") {
  const Graph& g = gq("w3").graph;
  const auto e = g.edges().front();
  Vertex y = 1;
  while (g.adjacent(0, y)) ++y;
  int screened = 0;
  for (const auto& ty : enumerate_types(5, 0)) {
    if (!check_k4e_free(ty.base.to_graph())) continue;
    ++screened;
    const auto [a, b] = ty.pair_adjacent() ? e : Edge{0, y};
    CHECK(count_type_anchored(g, ty, a, b) == 0);
  }
  CHECK(screened > 0);
}

TEST_CASE("K4,4 per edge") {
  const K44Census k44 = count_k44_per_edge(complete_bipartite(4, 4), false);
  CHECK(k44.status == TvcStatus::kSatisfied);
  CHECK(k44.complete);
  CHECK(k44.histogram == std::map<std::uint64_t, std::uint64_t>{{1, 16}});

  const K44Census small = count_k44_per_edge(complete_graph(7), false);
  CHECK(small.histogram == std::map<std::uint64_t, std::uint64_t>{{0, 21}});

  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 5; ++rep) {
    const Graph g = random_graph(14, 0.5, rng);
    const auto edges = g.edges();
    CHECK(k44_counts(g, edges, Exec{3}) == k44_counts_serial(g, edges));
  }
}

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 8; ++rep) {
    const Graph g = random_graph(24 + rep, 0.4, rng);
    std::vector<Edge> pairs;
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < g.order(); ++y)
        if (x != y) pairs.push_back({x, y});
    CHECK(common_neighbor_counts(g, pairs, Exec{4}) == common_neighbor_counts_serial(g, pairs));
    CHECK(fingerprints(g, TypeTable::get(5), pairs, Exec{4}) == fingerprints_serial(g, TypeTable::get(5), pairs));
    for (const auto& ty : enumerate_types(5, 2)) {
      std::vector<Edge> matching;
      for (auto p : pairs)
        if (g.adjacent(p.first, p.second) == ty.pair_adjacent()) matching.push_back(p);
      const EmbedPlan plan = EmbedPlan::make(ty.base);
      CHECK(anchored_counts(g, plan, matching, Exec{4}) == anchored_counts_serial(g, plan, matching));
    }
  }
}

TEST_CASE("verdicts do not depend on the thread count") {
  const Graph g = gqt::testing::shrikhande();
  for (auto mode : {TvcMode::exhaustive(), TvcMode::reduced(2)}) {
    const TvcVerdict a = check_tvc(g, 5, mode, {Exec::serial(), {}});
    const TvcVerdict b = check_tvc(g, 5, mode, {Exec{4}, {}});
    CHECK(a.status == b.status);
    CHECK(a.pairs_scanned == b.pairs_scanned);
    CHECK(a.types_checked == b.types_checked);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->first == b.witness->first);
    CHECK(a.witness->second == b.witness->second);
    CHECK(a.witness->type->code == b.witness->type->code);
  }
  const K44Census a = count_k44_per_edge(gq("q5_2").graph, false, {Exec::serial(), {}});
  const K44Census b = count_k44_per_edge(gq("q5_2").graph, false, {Exec{4}, {}});
  CHECK(a.counts == b.counts);
}

TEST_CASE("budget exhaustion gives an inconclusive verdict") {
  CHECK_THROWS_AS(Deadline::after(0), std::invalid_argument);
  const Deadline d = Deadline::after(1e-9);
  while (!d.expired()) {
  }
  TvcOptions opts;
  opts.deadline = d;
  const TvcVerdict v = check_tvc(gq("q5_3").graph, 6, TvcMode::exhaustive(), opts);
  CHECK(v.status == TvcStatus::kInconclusive);
  CHECK(v.verified_level == 2);
  CHECK(count_k44_per_edge(gq("q5_3").graph, true, opts).status == TvcStatus::kInconclusive);
  CHECK(find_distinguisher(gq("q5_3").graph, 6, 3, opts).status == TvcStatus::kInconclusive);
}
