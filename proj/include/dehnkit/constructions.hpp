#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/groups.hpp"
#include "dehnkit/quandles.hpp"
#include "dehnkit/smith.hpp"

namespace dehnkit {

/// Conjugation quandle x*y = yxy^{-1} on all of G, or on a union of
/// conjugacy classes when class representatives are given.
FiniteQuandle conj_quandle(const FiniteGroup& g,
                           const std::vector<int>& restrict_to_classes_of = {});

/// Core quandle x*y = yx^{-1}y; always involutory.
FiniteQuandle core_quandle(const FiniteGroup& g);

/// Generalized Alexander quandle x*y = phi(xy^{-1})y for an automorphism phi
/// given as an index permutation of G. Throws Error(not_automorphism).
FiniteQuandle alexander_quandle(const FiniteGroup& g, const std::vector<int>& phi);

/// Dehn quandle of G with respect to A: the union of conjugacy classes of the
/// seeds under conjugation. element_to_group maps quandle indices back to G.
struct DehnQuandle {
  FiniteQuandle quandle;
  FiniteGroup group;
  std::vector<int> seed_indices;
  std::vector<int> element_to_group;
  int quandle_index_of(int group_element) const;
};

DehnQuandle dehn_quandle(FiniteGroup g, std::vector<int> seeds);

struct ClassCounts {
  int c = 0;   // number of seed conjugacy classes
  int ct = 0;  // classes with a torsion representative (all, for finite G)
};
ClassCounts class_counts(const DehnQuandle& d);

/// Abelianized enveloping group: relations e_{x*y} = e_x, reported through the
/// Smith normal form of the deduplicated relation matrix.
struct EnvAbelianization {
  std::vector<BigInt> invariant_factors;
  int free_rank = 0;
  bool torsion_free() const;
};
EnvAbelianization env_abelianization(const FiniteQuandle& q);

/// Faithful quandles embed in Conj(Inn Q) via x -> S_x; the witness is the
/// Dehn quandle of the image inside the inner group together with the
/// verified isomorphism. Non-faithful input is undetermined, not "not Dehn".
struct DehnWitness {
  bool determined = false;
  std::optional<DehnQuandle> witness;
  std::vector<int> iso;  // q index -> witness index
};
DehnWitness dehn_witness(const FiniteQuandle& q);

struct InnCentralReport {
  bool ok = false;
  bool orders_match = false;
  bool iso_checked = false;  // false when both orders exceed the search bound
  bool iso_found = false;
  std::size_t inn_order = 0;
  std::size_t quotient_order = 0;
};

/// Compare Inn(D) against G/Z(G); isomorphism search for orders <= 5000,
/// order equality only (flagged) above. Throws Error(seeds_do_not_generate).
InnCentralReport inn_equals_central_quotient(const DehnQuandle& d);

/// Bi-order check for Alex(Z^2, M) with the fixed positive cone
/// f(a,b) = 2a - b - b*sqrt(5) > 0, compared exactly via quadratic-surd sign
/// rules. Verifies 0 < f(vM) and 0 < f(v - vM) on every sampled v with
/// f(v) > 0, plus order-compatibility of the induced operation on sampled
/// triples. M is row-major [[m00,m01],[m10,m11]] acting on row vectors.
struct BiorderVerdict {
  bool ok = false;
  long long positives_checked = 0;
  long long triples_checked = 0;
  std::string failure;
};
BiorderVerdict alexander_biorder_check(const std::array<long long, 4>& m,
                                       int box_radius = 12);

}  // namespace dehnkit
