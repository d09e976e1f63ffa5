#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/freeq.hpp"
#include "dehnkit/homsym.hpp"
#include "dehnkit/quandles.hpp"

namespace dehnkit {

struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = +1;
};

/// Knot diagram as a crossing list; each arc appears exactly once as under_in
/// and once as under_out (single component).
struct Diagram {
  int arcs = 0;
  std::vector<Crossing> crossings;
};

/// Lines "c <over> <under_in> <under_out> <+|->" with an optional "arcs N"
/// header (required when the crossing list is empty). Throws
/// Error(parse_error) / Error(invalid_arc_usage).
Diagram parse_diagram(const std::string& text);

/// Wirtinger relation per crossing: out = in * over at a positive crossing,
/// out = in *^{-1} over at a negative one.
std::int64_t coloring_count(const Diagram& d, const FiniteQuandle& q,
                            int bound = 64);

struct TrefoilReport {
  bool braid_relations = false;
  bool generation = false;
  int classes_expected = 0;
  int classes_reached = 0;
  bool freeness = false;
  std::string first_collision;  // the length-3 braid collision, as words
  bool ok() const { return braid_relations && generation && freeness; }
};

/// Finite shadow of the trefoil-torus identification in the lazy genus-one
/// model over Z: braid relations for a=(1,0), b=(0,1); reachability of every
/// primitive class with |entries| <= bound from {a,b} under * and *^{-1};
/// and a depth-3 freeness probe whose only collisions are the braid pairs.
TrefoilReport trefoil_torus_check(int bound);

enum class TwoGenKind { trivial, braid, free_up_to_depth };

struct TwoGenReport {
  long long ihat = 0;
  TwoGenKind kind = TwoGenKind::trivial;
  bool verified = false;
  std::string detail;
};

/// Classify the subquandle generated by two classes in the genus-one model:
/// |i^| = 0 means the classes coincide and trivial relations are verified,
/// |i^| = 1 verifies both braid relations, |i^| >= 2 runs the freeness probe
/// to the given depth and reports no relation.
TwoGenReport two_generator_structure(const PrimitiveClass& x,
                                     const PrimitiveClass& y, int depth);

}  // namespace dehnkit
