#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqt/exec.hpp"
#include "gqt/geometry.hpp"
#include "gqt/types.hpp"

// Closed-form counts of small graph types anchored at a pair of points of a
// generalised quadrangle, and a harness checking them by brute force.
namespace gqt {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FormulaFamily {
  kType0, kType1a, kType1b, kType2a, kType2b, kType2c, kType3a, kType3b,
  kCompleteS,  // additional vertices form a clique S
  kApex,       // line x,y,w,z plus a clique of size m through a fifth point of it
};

// Neighbours of a fixed vertex inside S: all of S, exactly one vertex, none.
enum class Attach { kFull, kOne, kZero };

struct FormulaId {
  FormulaFamily family = FormulaFamily::kType0;
  Attach dx = Attach::kFull, dy = Attach::kFull;  // completeS, dx >= dy
  bool same_z = false;  // completeS (1,1): x and y see the same vertex of S
  int m = 0;            // |S| for completeS, clique size for apex

  // "type0", "type2a", "completeS/11s/3", "completeS/F0/4", "apex/2".
  std::string name() const;
  static FormulaId parse(const std::string& text);

  static FormulaId complete_s(Attach dx, Attach dy, int m, bool same_z = false);
  static FormulaId apex(int m);
};

// The order-5 families, then every completeS case and subcase for sizes
// m_lo..m_hi.
std::vector<FormulaId> order5_formulas();
std::vector<FormulaId> complete_s_formulas(int m_lo, int m_hi);

// Throws FormulaError for an undefined case, or for the completeS and apex
// families when t != s^2.
std::uint64_t expected_count(const FormulaId& id, int s, int t, bool adjacent);

// The type counted by the formula, with the pair edge set by `adjacent`.
GraphType formula_type(const FormulaId& id, bool adjacent);

struct FormulaMismatch {
  Edge pair{};
  bool adjacent = false;
  std::uint64_t expected = 0, observed = 0;
};

struct FormulaReport {
  FormulaId id;
  GqOrder order;
  std::uint64_t expected_edge = 0, expected_non_edge = 0;
  std::uint64_t edges_checked = 0, non_edges_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<FormulaMismatch> mismatches;  // the first few, in pair order
  bool passed() const { return mismatch_count == 0; }
};

struct VerifyOptions {
  Exec exec;
  // 0 checks every pair; otherwise an evenly spaced sample per adjacency class.
  std::size_t max_pairs_per_class = 0;
};

// Throws FormulaError if the geometry is not a GQ.
FormulaReport verify_formula(const PartialLinearSpace& gq, const FormulaId& id, const VerifyOptions& opts = {});

}  // namespace gqt
