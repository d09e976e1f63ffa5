#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dehnkit/quandles.hpp"

namespace dehnkit {

inline constexpr std::size_t kDefaultCompletionCap = 10'000;

/// Simple graph on generator symbols; an edge means i(a,b) = 1, a non-edge
/// i(a,b) = 0. Presets follow the Humphries-curve intersection pattern:
/// g=1 a single edge a0-a1, g=2 the path a0-a1-a2-a3-a4, g>=3 the path
/// a1-a2-...-a{2g} plus the extra edge a0-a4.
struct IntersectionGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<int, int>> edges;  // i < j
  bool adjacent(int i, int j) const;
};

IntersectionGraph humphries_graph(int g);

/// Word over generator indices, left-associated, letters[0] is the base.
struct GenWord {
  std::vector<int> letters;
};

/// Involutory quandle presentation: point relations equate two words;
/// universal rules (u, w) say x.u = x.w for every element x. Involution
/// x.s.s = x and idempotence at the generators are implicit.
struct InvPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<GenWord, GenWord>> point_relations;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> universal_rules;
  int generator_index(const std::string& name) const;
};

/// Non-edge {a,b}: a*b = a, b*a = b and x.a.b = x.b.a.
/// Edge {a,b}: a*b*a = b, b*a*b = a and x.a.b.a = x.b.a.b.
InvPresentation relations_from_graph(const IntersectionGraph& graph);

/// Text format: "gens: a0 a1", "edge: a0 a1", "rel: a0*a1*a0 = a1",
/// "rule: *a1*a2 = *a2*a1". Edge lines put the file in graph mode, where
/// unlisted pairs are non-edges; a bare gens line is an edgeless graph.
InvPresentation parse_presentation(const std::string& text);

GenWord parse_gen_word(const std::string& text, const InvPresentation& pres);

struct CompletionStats {
  std::size_t elements_created = 0;
  std::size_t merges = 0;
  std::size_t passes = 0;
};

struct CompletionResult {
  FiniteQuandle quandle;                 // labels carry the witness words
  std::vector<std::string> witnesses;    // one left-associated word per element
  std::vector<int> generator_elements;   // generator index -> element index
  InvPresentation presentation;
  CompletionStats stats;
};

/// Todd-Coxeter-style completion: define table entries on demand while
/// tracing every point relation and every universal rule at every live
/// element, merging coincidences through a union-find with deduction
/// propagation. Terminates when the table is total and every rule instance
/// traces consistently; throws Error(cap_exceeded) past the cap. The final
/// table is extended from generator columns to all columns via
/// S_{w.s} = S_s S_w S_s and validated.
CompletionResult complete(const InvPresentation& pres,
                          std::size_t cap = kDefaultCompletionCap);

/// Fold a word through the completed table (signs are irrelevant here).
int evaluate_word(const CompletionResult& result, const GenWord& word);
int evaluate_word(const CompletionResult& result, const std::string& text);

struct IdentityCheck {
  std::string name;
  std::string lhs, rhs;
  bool equal = false;
};

struct LemmaReport {
  int checked = 0;
  int failed = 0;
  std::vector<IdentityCheck> failures;
};

/// Evaluate both sides of every instance of the two chain-identity lemmas in
/// the completed humphries(g) quandle, g >= 3: family (i) for m = 1,2,3 at
/// every element, family (ii) for n = 5..2g at every element, and the three
/// c_{m,n}*a0*a4 identities.
LemmaReport verify_lemma_identities(const CompletionResult& result, int g = 3);

struct TableCellMismatch {
  std::string row, column, expected, got;
};

struct Table1Report {
  int checked = 0;
  std::vector<TableCellMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Verify all 245 products x*a_i of the genus-3 closure-set table against
/// the completed quandle.
Table1Report verify_table1(const CompletionResult& result);

/// Isomorphism between the completed humphries(g) quandle and the homological
/// quandle P_{g,2}, when one exists.
std::optional<std::vector<int>> quotient_iso_to_homological(const CompletionResult& result,
                                                            int g);

/// Words c_{m,n} = a_m*...*a_n and the closure-set row words f_{m,n}(v) for
/// the genus-3 table; exposed for tests and the CLI listing.
GenWord chain_word(int m, int n);
std::vector<std::pair<std::string, GenWord>> table1_rows();

}  // namespace dehnkit
