#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gqt/canonical.hpp"
#include "gqt/graph.hpp"

namespace gqt {

// A small graph with fixed vertices x0 = slot 0 and y0 = slot 1; the other
// slots are additional vertices.
struct GraphType {
  SmallGraph base;
  CanonicalCode code;
  std::string label;  // optional human name, e.g. "3a"

  int order() const { return base.n; }
  bool pair_adjacent() const { return base.adjacent(0, 1); }
  int min_additional_valency() const;

  static GraphType from_graph(const SmallGraph& g, std::string label = {});
  static GraphType from_code(const CanonicalCode& code, std::string label = {});
};

// Deterministic enumeration order: edge count, then canonical code.
bool type_order_less(const CanonicalCode& a, const CanonicalCode& b);

// All pair-rooted isomorphism classes of order t, plus (for t <= 7) a lookup
// from every labelled adjacency mask to its class. Classes are sorted in the
// deterministic type order.
class TypeTable {
 public:
  static constexpr int kMaxLookupOrder = 7;

  // Cached per order; thread-safe.
  static const TypeTable& get(int t);

  int order() const { return t_; }
  std::size_t size() const { return classes_.size(); }
  const CanonicalCode& code(std::size_t cls) const { return classes_[cls]; }
  const std::vector<CanonicalCode>& classes() const { return classes_; }
  std::uint32_t class_of(std::uint64_t mask) const { return lookup_[mask]; }
  bool has_lookup() const { return !lookup_.empty(); }
  // Returns size() when the code is not a class of this table.
  std::size_t index_of(const CanonicalCode& code) const;

 private:
  explicit TypeTable(int t);

  int t_;
  std::vector<CanonicalCode> classes_;
  std::vector<std::uint32_t> lookup_;
  std::map<CanonicalCode, std::size_t> index_;
};

// Throws GraphError when t is outside 2..8 or the valency bound is invalid.
std::vector<GraphType> enumerate_types(int t, int min_add_valency);

// Groups types that differ only by exchanging the fixed vertices or by the
// edge between them. Groups come out in the order of their first member.
std::vector<std::vector<GraphType>> group_type_shapes(const std::vector<GraphType>& types);

// Classes of graphs on {x,y,a,b,c} (edge xy never used) with at most three
// edges, up to S({x,y}) x S({a,b,c}).
struct ComplementClass {
  int size = 0;
  std::string label;  // "0", "1a", "2c", ...
  std::vector<std::pair<int, int>> edges;  // vertices x=0, y=1, a=2, b=3, c=4
  int aut_order = 0;
  int orbit_length = 0;
  bool retained = false;  // each of a, b, c has valency <= 1
};

struct Order5Enumeration {
  std::vector<ComplementClass> classes;
  std::map<int, int> classes_by_size;
  std::map<int, int> orbit_sum_by_size;
};

Order5Enumeration enumerate_order5_complements();

// The eight order-5 types whose complements are the retained classes, with
// the edge xy set according to `pair_adjacent`. Labels follow the complement
// classes: "0", "1a", "1b", "2a", "2b", "2c", "3a", "3b".
std::vector<GraphType> order5_reduced_types(bool pair_adjacent);
GraphType order5_type(const std::string& label, bool pair_adjacent);

// Graphs S of order t0-2 that survive every structural constraint on the
// additional vertices of a minimal failing type of order t0 in a GQ(s,s^2)
// point graph. 6 <= t0 <= 8.
std::vector<Graph> enumerate_s_candidates(int t0);

}  // namespace gqt
