#include <doctest.h>

#include "fixtures.hpp"
#include "gqt/formulas.hpp"

using namespace gqt;
using gqt::testing::binomial;
using gqt::testing::gq;

TEST_CASE("formula ids") {
  for (const char* s : {"type0", "type1a", "type3b", "completeS/FF/2", "completeS/F1/3", "completeS/11s/3",
                        "completeS/11d/4", "completeS/00/5", "apex/2"}) {
    CAPTURE(s);
    CHECK(FormulaId::parse(s).name() == s);
  }
  for (const char* s : {"", "type4", "completeS/11/3", "completeS/0F/3", "completeS/FF/1", "completeS/FF/9",
                        "completeS/F1s/3", "apex/7", "apex/1", "apex/x"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(FormulaId::parse(s), FormulaError);
  }
  CHECK(order5_formulas().size() == 8);
  // Per size: (F,F), (F,1), (F,0), (1,1) same and different, (1,0), (0,0).
  CHECK(complete_s_formulas(3, 5).size() == 21);
}

TEST_CASE("closed forms") {
  CHECK(expected_count(FormulaId::parse("type0"), 5, 3, true) == 4);
  CHECK(expected_count(FormulaId::parse("type0"), 5, 3, false) == 0);
  CHECK(expected_count(FormulaId::parse("type2a"), 3, 9, false) == 10);
  CHECK(expected_count(FormulaId::parse("type3a"), 2, 4, true) == 0);
  CHECK(expected_count(FormulaId::parse("type3a"), 3, 9, true) == 9);
  CHECK(expected_count(FormulaId::parse("completeS/11s/3"), 3, 9, false) == 240);
  CHECK_THROWS_AS(expected_count(FormulaId::parse("completeS/11s/3"), 3, 3, false), FormulaError);
  CHECK_THROWS_AS(expected_count(FormulaId::parse("apex/2"), 2, 2, true), FormulaError);

  for (const char* d : {"type1a", "type1b", "type2b", "type2c", "type3b"})
    for (int s : {2, 3, 5})
      for (bool adj : {true, false}) CHECK(expected_count(FormulaId::parse(d), s, s * s, adj) == 0);

  for (int s : {2, 3, 4})
    for (int m = 2; m <= 5; ++m) {
      const FormulaId id = FormulaId::complete_s(Attach::kFull, Attach::kFull, m);
      CHECK(expected_count(id, s, s * s, true) == binomial(s - 1, m));
      CHECK(expected_count(id, s, s * s, false) == 0);
    }
}

TEST_CASE("order-5 totals stay below C(n-2, 3)") {
  for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}, {3, 9}, {5, 3}, {4, 16}}) {
    const std::uint64_t n = (s + 1) * (s * t + 1);
    for (bool adj : {true, false}) {
      std::uint64_t total = 0;
      for (const auto& id : order5_formulas()) total += expected_count(id, s, t, adj);
      CHECK(total <= binomial(n - 2, 3));
    }
  }
}

TEST_CASE("formula types") {
  const GraphType t3a = formula_type(FormulaId::parse("type3a"), true);
  CHECK(t3a.order() == 5);
  CHECK(t3a.pair_adjacent());
  CHECK_FALSE(formula_type(FormulaId::parse("type3a"), false).pair_adjacent());
  const GraphType cs = formula_type(FormulaId::parse("completeS/F0/4"), false);
  CHECK(cs.order() == 6);
  // x sees all of S, y none of it.
  for (int v = 2; v < 6; ++v) {
    CHECK(cs.base.adjacent(0, v));
    CHECK_FALSE(cs.base.adjacent(1, v));
  }
}

TEST_CASE("order-5 formulas match brute force on small quadrangles") {
  for (auto [name, dual] : std::vector<std::pair<const char*, bool>>{{"w2", false}, {"w3", false}, {"q5_2", false}}) {
    for (const auto& id : order5_formulas()) {
      CAPTURE(name);
      CAPTURE(id.name());
      const FormulaReport r = verify_formula(gq(name, dual).pls, id);
      CHECK(r.passed());
      CHECK(r.edges_checked + r.non_edges_checked == binomial(gq(name, dual).pls.num_points, 2));
    }
  }
}

TEST_CASE("completeS formulas match brute force on GQ(2,4)") {
  const auto& b = gq("q5_2");
  for (const auto& id : complete_s_formulas(2, 5)) {
    CAPTURE(id.name());
    CHECK(verify_formula(b.pls, id).passed());
  }
  for (int m = 2; m <= 6; ++m) CHECK(verify_formula(b.pls, FormulaId::apex(m)).passed());
}

TEST_CASE("GQ(3,9): the (1,1) same-point case on non-edges") {
  const FormulaReport r = verify_formula(gq("q5_3").pls, FormulaId::parse("completeS/11s/3"));
  CHECK(r.passed());
  CHECK(r.expected_non_edge == 240);
  CHECK(r.non_edges_checked == 112 * 81 / 2);
}

TEST_CASE("verification harness") {
  VerifyOptions opts;
  opts.max_pairs_per_class = 10;
  const FormulaReport r = verify_formula(gq("w3").pls, FormulaId::parse("type2a"), opts);
  CHECK(r.passed());
  CHECK(r.edges_checked == 10);
  CHECK(r.non_edges_checked == 10);

  CHECK_THROWS_AS(verify_formula(gq("w3").pls, FormulaId::parse("completeS/FF/3")), FormulaError);
  PartialLinearSpace broken = gq("w2").pls;
  broken.lines.pop_back();
  CHECK_THROWS_AS(verify_formula(broken, FormulaId::parse("type0")), FormulaError);
}

TEST_CASE("apex counts on a sample of GQ(5,25)" * doctest::timeout(900)) {
  const auto& b = gq("payne", true);
  VerifyOptions opts;
  opts.max_pairs_per_class = 300;
  for (int m = 2; m <= 6; ++m) {
    CAPTURE(m);
    const FormulaReport r = verify_formula(b.pls, FormulaId::apex(m), opts);
    CHECK(r.passed());
    CHECK(r.edges_checked == 300);
  }
  CHECK(expected_count(FormulaId::apex(2), 5, 25, true) > 0);
}
