#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/constructions.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/quandles.hpp"

namespace dehnkit {

/// Canonical +-class of a primitive vector in Z^{2g} (mod = 0) or Z_n^{2g}.
/// Over Z the representative has its first nonzero entry positive; over Z_n
/// it is the lexicographic minimum of v and -v.
struct PrimitiveClass {
  long long mod = 0;  // 0 means Z
  std::vector<long long> v;

  int genus() const { return static_cast<int>(v.size()) / 2; }
  bool operator==(const PrimitiveClass& o) const { return mod == o.mod && v == o.v; }
  bool operator<(const PrimitiveClass& o) const {
    return std::tie(mod, v) < std::tie(o.mod, o.v);
  }
};

std::string format_class(const PrimitiveClass& c);

/// i^(x,y) = sum x_{2i-1} y_{2i} - x_{2i} y_{2i-1}, reduced mod n when n > 0.
/// Throws Error(length_mismatch) on shape disagreement.
long long intersection_form(const std::vector<long long>& x,
                            const std::vector<long long>& y, long long mod = 0);

bool is_primitive(const std::vector<long long>& v, long long mod);
PrimitiveClass canonical_class(std::vector<long long> v, long long mod);

/// x*y = x + i^(x,y) y on canonical representatives, re-canonicalized;
/// well defined on +-classes. Works lazily over Z (mod = 0).
PrimitiveClass hclass_op(const PrimitiveClass& x, const PrimitiveClass& y);
/// x *^{-1} y = x - i^(x,y) y.
PrimitiveClass hclass_dual(const PrimitiveClass& x, const PrimitiveClass& y);

/// Lazy model over Z for the freeness probe.
struct HClassModel {
  using Elem = PrimitiveClass;
  Elem op(const Elem& a, const Elem& b) const { return hclass_op(a, b); }
};

/// Finite homological quandle P_{g,n}: all primitive classes of Z_n^{2g}
/// mod +-1 with the intersection-form operation. Labels carry the tuples.
struct HQuandle {
  FiniteQuandle quandle;
  std::vector<PrimitiveClass> classes;  // index aligned with quandle elements
  int index_of(const PrimitiveClass& c) const;
};

HQuandle hquandle(int g, long long n, std::size_t bound = 1 << 20);

/// Symplectic transvection z -> z + i^(z,v) v as a matrix over Z_n acting on
/// column vectors; fixes v and preserves the form.
MatModN transvection(const PrimitiveClass& v, long long n);
/// Integer-matrix variant for Z (row-major 2g x 2g, column action).
std::vector<long long> transvection_z(const PrimitiveClass& v);

/// Sp(2g, Z_q) for prime q as the closure of all transvections of primitive
/// classes. Cross-checked in tests against q^{g^2} prod (q^{2i} - 1).
FiniteGroup sp_group(int g, long long q, std::size_t cap = kDefaultGroupCap);

/// Dehn quandle of Sp(2g, Z_q) seeded by transvection(e1).
DehnQuandle dehn_of_sp(int g, long long q, std::size_t cap = kDefaultGroupCap);

struct LambdaReport {
  bool ok = false;
  bool bijective = false;
  bool homomorphism = false;
  std::size_t quandle_size = 0;
  std::size_t class_size = 0;
};

/// Verify [b] -> transvection(b) is a bijection P_{g,q} -> seed class of
/// Sp(2g, Z_q) and a quandle homomorphism, exhaustively.
LambdaReport lambda_check(int g, long long q, std::size_t cap = kDefaultGroupCap);

/// Reduction of an integral class mod n, canonicalized.
PrimitiveClass mod_reduce(const PrimitiveClass& x, long long n);

/// Integral primitive lift of a residue class, if the small search finds one
/// (it always does for the tested parameters).
std::optional<std::vector<long long>> lift_primitive(const std::vector<long long>& r,
                                                     long long n);

struct ModReduceReport {
  bool homomorphism = false;
  bool surjective = false;
  int pairs_checked = 0;
  int classes_lifted = 0;
};

/// Check phi_n: P_g -> P_{g,n} is a homomorphism on sampled integral pairs
/// and surjective by lifting every class of P_{g,n}.
ModReduceReport mod_reduce_check(int g, long long n, int box_radius = 3);

}  // namespace dehnkit
