#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnkit/error.hpp"

namespace dehnkit {

/// Freely reduced word in a free group; letters are (generator, +-1).
struct FreeGroupWord {
  std::vector<std::pair<std::string, int>> letters;
  bool operator==(const FreeGroupWord& o) const { return letters == o.letters; }
  bool operator<(const FreeGroupWord& o) const { return letters < o.letters; }
};

FreeGroupWord free_reduce(std::vector<std::pair<std::string, int>> letters);
FreeGroupWord free_mul(const FreeGroupWord& a, const FreeGroupWord& b);
FreeGroupWord free_inv(const FreeGroupWord& a);
std::string format_group_word(const FreeGroupWord& w);

/// Left-associated quandle word a_0 *^{e_1} a_1 *^{e_2} ... *^{e_n} a_n.
struct QuandleWord {
  std::string base;
  std::vector<std::pair<std::string, int>> ops;
};

/// Rendered as "a*b*-c" (sign prefix for the dual operation).
QuandleWord parse_quandle_word(const std::string& text);
std::string format_quandle_word(const QuandleWord& w);

/// Normal form w s w^{-1} in the free quandle: freely reduced conjugator that
/// does not end in base^{+-1}.
struct FreeQuandleElement {
  FreeGroupWord conjugator;
  std::string base;
  bool operator==(const FreeQuandleElement& o) const {
    return base == o.base && conjugator == o.conjugator;
  }
  bool operator<(const FreeQuandleElement& o) const {
    return std::tie(base, conjugator) < std::tie(o.base, o.conjugator);
  }
};

FreeQuandleElement free_normalize(const QuandleWord& w);
bool free_equal(const QuandleWord& a, const QuandleWord& b);
/// Expand a normal form back into a left-associated word (round-trip support).
QuandleWord free_expand(const FreeQuandleElement& e);

/// Word in the free involutory quandle, stored base-first: letters[0] is the
/// base and the rest are applied left to right. Normal form has no two equal
/// adjacent letters.
struct InvolutoryWord {
  std::vector<std::string> letters;
  bool operator==(const InvolutoryWord& o) const { return letters == o.letters; }
};

/// Delete adjacent equal applied pairs (x*s*s = x) and absorb a duplicated
/// base letter (s*s = s) until no redex remains. Confluent.
InvolutoryWord inv_normalize(std::vector<std::string> seq);

/// Winker's product of left-associated involutory words, then normalize.
InvolutoryWord inv_multiply(const InvolutoryWord& u, const InvolutoryWord& v);

/// Palindromic image x_1^{d_1}...x_n^{d_n}...x_1^{d_1} in the free group,
/// d_i = (-1)^{i+1} counted from the outermost applied letter.
FreeGroupWord core_embed(const InvolutoryWord& u);

std::string format_involutory_word(const InvolutoryWord& w);

/// Positive left-associated word over two generators (0 and 1); ops[0] != base
/// is the free normal form condition for positive words.
struct ProbeWord {
  int base = 0;
  std::vector<int> ops;
  int length() const { return 1 + static_cast<int>(ops.size()); }
};
std::string format_probe_word(const ProbeWord& w, const std::string& x,
                              const std::string& y);

struct FreeCollision {
  ProbeWord earlier;
  ProbeWord later;
};

/// Enumerate distinct positive free normal forms in two generators up to the
/// given word length (breadth-first, letter 0 before letter 1) and report the
/// first pair that collide in the model, or nullopt. Model supplies Elem,
/// ordered by <, and op(Elem, Elem) -> Elem.
inline constexpr int kMaxProbeDepth = 8;

template <class Model>
std::optional<FreeCollision> freeness_probe(const Model& model,
                                            typename Model::Elem x,
                                            typename Model::Elem y, int depth) {
  using Elem = typename Model::Elem;
  if (depth < 1 || depth > kMaxProbeDepth)
    throw Error(ErrorKind::bound_exceeded,
                "probe depth must be between 1 and " + std::to_string(kMaxProbeDepth));
  std::map<Elem, ProbeWord> seen;
  std::vector<std::pair<ProbeWord, Elem>> layer;
  for (int base = 0; base < 2; ++base) {
    ProbeWord w{base, {}};
    Elem v = base == 0 ? x : y;
    auto [it, fresh] = seen.emplace(v, w);
    if (!fresh) return FreeCollision{it->second, w};
    layer.push_back({w, v});
  }
  const Elem gens[2] = {x, y};
  for (int len = 2; len <= depth; ++len) {
    std::vector<std::pair<ProbeWord, Elem>> next;
    for (const auto& [w, v] : layer) {
      for (int s = 0; s < 2; ++s) {
        if (w.ops.empty() && s == w.base) continue;  // a*a = a
        ProbeWord e = w;
        e.ops.push_back(s);
        Elem ev = model.op(v, gens[s]);
        auto [it, fresh] = seen.emplace(ev, e);
        if (!fresh) return FreeCollision{it->second, e};
        next.push_back({e, ev});
      }
    }
    layer.swap(next);
  }
  return std::nullopt;
}

/// Model over the free quandle itself; the probe never finds a collision here.
struct FreeQuandleModel {
  using Elem = FreeQuandleElement;
  Elem op(const Elem& a, const Elem& b) const;
};

}  // namespace dehnkit
