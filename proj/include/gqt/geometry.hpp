#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqt/field.hpp"
#include "gqt/graph.hpp"

namespace gqt {

// (s, t): points per line minus one, lines per point minus one.
struct GqOrder {
  int s = 0;
  int t = 0;
  bool operator==(const GqOrder&) const = default;
};

// Points are 0..num_points-1; each line is a sorted list of point indices.
struct PartialLinearSpace {
  std::size_t num_points = 0;
  std::vector<std::vector<Vertex>> lines;
  std::optional<GqOrder> order;
};

// Sorts every line, sorts and deduplicates the line list.
void normalize(PartialLinearSpace& pls);

struct PlsWitness {
  enum class Kind { kBadLine, kSharedPair, kLineSize, kPointDegree };
  Kind kind = Kind::kBadLine;
  std::size_t line_a = 0;
  std::size_t line_b = 0;
  std::size_t point = 0;
  std::size_t count = 0;
  std::size_t expected = 0;
  std::string describe() const;
};

struct PlsCheck {
  std::optional<GqOrder> order;
  std::optional<PlsWitness> witness;
  bool ok() const { return order.has_value(); }
};

PlsCheck validate_pls(const PartialLinearSpace& pls);

// Witness for a point P off a line l collinear with `count` != 1 points of l.
struct GqWitness {
  std::size_t point = 0;
  std::size_t line = 0;
  std::size_t count = 0;
};

std::optional<GqWitness> check_gq_axiom(const PartialLinearSpace& pls);

// Throws GraphError when the input is not a valid partial linear space.
PartialLinearSpace dualize(const PartialLinearSpace& pls);

Graph point_graph(const PartialLinearSpace& pls);

// Incidence text: "p <points> l <lines>" then one line of point indices per line.
void write_incidence(std::ostream& out, const PartialLinearSpace& pls);
PartialLinearSpace read_incidence(std::istream& in);

// Classical W(q) in PG(3,q) for the form x0y1 - x1y0 + x2y3 - x3y2; q <= 5.
PartialLinearSpace build_symplectic_gq(int q);
// Q-(5,q): x0x1 + x2x3 + f(x4,x5) = 0 with f the default irreducible quadratic; q <= 3 prime.
PartialLinearSpace build_elliptic_gq(int q);
// T2*(O) over GF(4) with O the conic {(1,t,t^2)} plus (0,1,0) and (0,0,1).
PartialLinearSpace build_t2star_gq();

struct QClan {
  FieldPtr field;
  std::vector<Matrix2> matrices;  // indexed by field element
};

QClan payne_qclan();

// Coset geometry of the Kantor family defined by the clan: a GQ of order
// (q^2, q). Throws GraphError if the clan is not anisotropic or the result
// fails the axioms.
PartialLinearSpace build_flock_gq(const QClan& clan);

}  // namespace gqt
