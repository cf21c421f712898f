#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqt/canonical.hpp"
#include "gqt/exec.hpp"
#include "gqt/graph.hpp"
#include "gqt/types.hpp"

namespace gqt {

struct Fingerprint {
  bool adjacent = false;
  std::map<CanonicalCode, std::uint64_t> counts;  // nonzero entries only
};

// Exhaustive subset scan; 2 <= t <= 7.
Fingerprint pair_fingerprint(const Graph& g, int t, Vertex x, Vertex y);

// Induced copies of the type containing x in slot 0 and y in slot 1. Throws
// GraphError when the pair's adjacency does not match the type.
std::uint64_t count_type_anchored(const Graph& g, const GraphType& ty, Vertex x, Vertex y);

enum class TvcStatus { kSatisfied, kViolated, kInconclusive };
const char* to_string(TvcStatus s);

struct TvcMode {
  enum class Kind { kExhaustive, kReduced } kind = Kind::kExhaustive;
  int k = 2;  // isoregularity level used by reduced mode

  static TvcMode exhaustive() { return {}; }
  static TvcMode reduced(int k) { return {Kind::kReduced, k}; }
  std::string describe() const;
};

struct TvcOptions {
  Exec exec;
  Deadline deadline;
};

// Two ordered pairs of the same adjacency class whose counts of `type` differ.
// Level 2 with no type means the graph is not regular (pairs are loops).
struct TvcWitness {
  int level = 0;
  std::optional<GraphType> type;
  Edge first{}, second{};
  std::uint64_t first_count = 0, second_count = 0;
};

struct TvcVerdict {
  int t = 0;
  TvcStatus status = TvcStatus::kInconclusive;
  std::optional<TvcWitness> witness;
  int verified_level = 0;  // highest level known to hold
  std::uint64_t types_checked = 0;
  std::uint64_t pairs_scanned = 0;
};

// Exhaustive mode needs t <= 7. Reduced mode throws GraphError when the graph
// is not k-isoregular (1 <= k <= 3); it then checks levels 3..t by types whose
// additional vertices all have valency >= k+1.
TvcVerdict check_tvc(const Graph& g, int t, TvcMode mode, const TvcOptions& opts = {});

struct DistinguisherResult {
  TvcStatus status = TvcStatus::kInconclusive;  // kViolated: a type was found
  std::optional<TvcWitness> witness;
  std::uint64_t types_checked = 0;
};

// First type of enumerate_types(t, k+1) whose anchored counts are not
// constant on ordered edges or on ordered non-edges. Throws GraphError when
// the graph is not k-isoregular or fails the (t-1)-vertex condition.
DistinguisherResult find_distinguisher(const Graph& g, int t, int k, const TvcOptions& opts = {});

struct K44Census {
  TvcStatus status = TvcStatus::kInconclusive;  // kViolated: two values seen
  std::vector<std::pair<Edge, std::uint64_t>> counts;  // in edge order, as far as scanned
  std::map<std::uint64_t, std::uint64_t> histogram;    // value -> edges
  std::optional<std::array<std::pair<Edge, std::uint64_t>, 2>> differing;
  bool complete = false;
};

// Scans edges in lexicographic order. With stop_at_difference the scan ends
// after the chunk in which a second value appears.
K44Census count_k44_per_edge(const Graph& g, bool stop_at_difference, const TvcOptions& opts = {});

}  // namespace gqt
