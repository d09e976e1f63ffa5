#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnkit/groups.hpp"

namespace dehnkit {

inline constexpr int kDefaultAutBound = 64;
inline constexpr int kDefaultOrderSearchBound = 10;
inline constexpr int kDefaultIsoBound = 256;

struct AxiomViolation {
  enum class Axiom { idempotence, right_bijectivity, distributivity };
  Axiom axiom;
  int x = -1, y = -1, z = -1;
  std::string describe() const;
};

/// Finite quandle given by its n x n operation table, table[x][y] = x*y.
/// Immutable after validation; all queries are read-only.
struct FiniteQuandle {
  int n = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;  // optional, size n when present

  int size() const { return n; }
  int op(int x, int y) const { return table[x][y]; }
  /// x *^{-1} y: the unique z with z*y = x.
  int dual_op(int x, int y) const;
  std::string label(int x) const;
};

/// Check the three quandle axioms exhaustively; nullopt means valid.
std::optional<AxiomViolation> check_axioms(const std::vector<std::vector<int>>& table);

/// Validate and wrap a table; throws Error(axiom_violation) with the witness.
FiniteQuandle make_quandle(std::vector<std::vector<int>> table,
                           std::vector<std::string> labels = {});

FiniteQuandle trivial_quandle(int n);
FiniteQuandle dihedral_quandle(int n);  // x*y = 2y - x mod n

/// Orbits of the inner group, lowest element first in each orbit.
std::vector<std::vector<int>> components(const FiniteQuandle& q);

/// Permutation group generated by the right translations S_y.
FiniteGroup inner_group(const FiniteQuandle& q,
                        std::size_t cap = kDefaultGroupCap);

/// All bijections preserving *, found by generator-anchored backtracking.
FiniteGroup aut_group(const FiniteQuandle& q, int bound = kDefaultAutBound);

/// Least n with all S_y^n = id (1 for trivial quandles, 2 for involutory).
int quandle_exponent(const FiniteQuandle& q);

/// True iff y -> S_y is injective.
bool is_faithful(const FiniteQuandle& q);

/// Greedy minimal generating set: repeatedly add the element with the largest
/// closure gain, lowest index on ties.
std::vector<int> minimal_generating_set(const FiniteQuandle& q);

/// Backtracking isomorphism search anchored on a generating set of a, pruned
/// by component sizes and S_y cycle types. find_isomorphism(q, q) returns the
/// identity first.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b,
                                                 int bound = kDefaultIsoBound);

enum class OrderSide { left, right, bi };

/// Exhaustive search for a linear order realizing translation-monotonicity.
/// Right translations are bijections, so right-monotonicity is strict; left
/// translations need not be injective and ties are allowed there (otherwise
/// no quandle with two elements in a component could qualify).
std::optional<std::vector<int>> search_linear_order(const FiniteQuandle& q,
                                                    OrderSide side,
                                                    int bound = kDefaultOrderSearchBound);

/// Distinct x,y with x*y*x = y and y*x*y = x, if any (lowest pair first).
std::optional<std::pair<int, int>> braid_pair_exists(const FiniteQuandle& q);

FiniteQuandle product(const FiniteQuandle& a, const FiniteQuandle& b);
FiniteQuandle disjoint_union(const FiniteQuandle& a, const FiniteQuandle& b);

/// Closure of seeds under * and *^{-1}, ascending element order.
std::vector<int> subquandle_generated(const FiniteQuandle& q,
                                      const std::vector<int>& seeds);

// Operation-table JSON: {"v":1,"size":n,"table":[[...]...],"labels":[...]}.
FiniteQuandle quandle_from_json_text(const std::string& text);
std::string quandle_to_json_text(const FiniteQuandle& q);
std::string quandle_to_csv(const FiniteQuandle& q);

}  // namespace dehnkit
