#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dehnkit/error.hpp"

namespace dehnkit {

// Default closure cap; Sp(6,2) of order 1451520 is the largest intended target.
inline constexpr std::size_t kDefaultGroupCap = 2'000'000;

// Closure cap, overridable through the DEHNKIT_CAP environment variable.
std::size_t group_cap_from_env(std::size_t fallback = kDefaultGroupCap);

/// Permutation of {0,...,degree-1}, stored as the image array.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int degree);
  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int p) const { return images[p]; }
  bool is_identity() const;
  bool is_valid() const;  // images is a bijection
  /// Function composition: (a.compose(b))(x) = a(b(x)).
  Permutation compose(const Permutation& b) const;
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

/// Parse cycle notation like "(0 1)(2 3)"; degree is max point + 1 unless a
/// larger hint is given. "()" or an empty string is the identity.
Permutation parse_cycles(const std::string& text, int degree_hint = 0);
std::string to_cycles(const Permutation& p);

/// Square matrix over Z_n with unit determinant (checked on parse/generation).
struct MatModN {
  int dim = 0;
  long long mod = 0;
  std::vector<long long> a;  // row-major, entries in [0, mod)

  static MatModN identity(int dim, long long mod);
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  MatModN mul(const MatModN& o) const;
  MatModN inverse() const;  // adjugate * det^{-1}; requires unit det
  long long det() const;
  bool is_identity() const;
  bool operator==(const MatModN& o) const {
    return dim == o.dim && mod == o.mod && a == o.a;
  }
};

/// Parse "mod=3; 1 1 / 0 1" (rows slash-separated).
MatModN parse_matrix(const std::string& text);
std::string format_matrix(const MatModN& m);

long long mod_inverse(long long x, long long n);  // throws if not a unit

/// Finite group enumerated by breadth-first closure of its generators.
/// Elements are indices into a canonical list; index 0 is the identity.
/// Immutable after generation and safe to share between threads.
class FiniteGroup {
 public:
  enum class Carrier { permutation, matrix };

  /// The trivial group; placeholder value for aggregates built in stages.
  FiniteGroup();

  static FiniteGroup from_permutations(std::vector<Permutation> gens,
                                       std::size_t cap = kDefaultGroupCap);
  static FiniteGroup from_matrices(std::vector<MatModN> gens,
                                   std::size_t cap = kDefaultGroupCap);

  Carrier carrier() const { return carrier_; }
  std::size_t size() const;
  int identity() const { return 0; }
  int mul(int i, int j) const;
  int inv(int i) const;
  const std::vector<int>& generator_indices() const { return generators_; }

  const Permutation& perm(int i) const { return perms_[i]; }
  const MatModN& mat(int i) const { return mats_[i]; }
  int index_of(const Permutation& p) const;
  int index_of(const MatModN& m) const;
  std::string element_name(int i) const;

 private:
  struct Unbuilt {};
  explicit FiniteGroup(Unbuilt) {}
  void build(std::size_t cap);
  std::string encode(int i) const;
  std::optional<int> lookup(const std::string& key) const;

  Carrier carrier_ = Carrier::permutation;
  std::vector<Permutation> perms_;
  std::vector<MatModN> mats_;
  std::vector<int> generators_;
  std::unordered_map<std::string, int> index_;
  mutable std::vector<int> inverse_cache_;
};

/// Convenience front end used by the CLI text format: every generator must be
/// of the same carrier kind (MixedCarriers otherwise).
struct GeneratorSet {
  std::vector<Permutation> perms;
  std::vector<MatModN> mats;
  bool is_permutation() const { return !perms.empty(); }
};
GeneratorSet parse_generators(const std::string& text);
FiniteGroup generate_group(const GeneratorSet& gens,
                           std::size_t cap = kDefaultGroupCap);

std::vector<int> conjugacy_class(const FiniteGroup& g, int x);
std::vector<int> center(const FiniteGroup& g);
FiniteGroup quotient_by_center(const FiniteGroup& g);
int element_order(const FiniteGroup& g, int x);

/// Greedy generating set: repeatedly pick the element whose closure gain is
/// largest (lowest index on ties).
std::vector<int> small_generating_set(const FiniteGroup& g);

/// Generator-anchored backtracking isomorphism search; returns the image of
/// every element of a, or nullopt.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);

// Named group constructors used across the test suite.
FiniteGroup symmetric_group(int n);
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup sl2(long long q);       // SL(2, Z_q)

}  // namespace dehnkit
