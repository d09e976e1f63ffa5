#include "dehnkit/freeq.hpp"

#include <algorithm>
#include <sstream>

namespace dehnkit {

FreeGroupWord free_reduce(std::vector<std::pair<std::string, int>> letters) {
  FreeGroupWord w;
  for (auto& l : letters) {
    if (l.second == 0) continue;
    if (!w.letters.empty() && w.letters.back().first == l.first &&
        w.letters.back().second == -l.second) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(std::move(l));
    }
  }
  return w;
}

FreeGroupWord free_mul(const FreeGroupWord& a, const FreeGroupWord& b) {
  std::vector<std::pair<std::string, int>> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(std::move(letters));
}

FreeGroupWord free_inv(const FreeGroupWord& a) {
  FreeGroupWord w;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.letters.push_back({it->first, -it->second});
  return w;
}

std::string format_group_word(const FreeGroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& [sym, sign] : w.letters) {
    if (!out.empty()) out += ' ';
    out += sym;
    if (sign < 0) out += "^-1";
  }
  return out;
}

QuandleWord parse_quandle_word(const std::string& text) {
  QuandleWord w;
  std::string token;
  std::vector<std::pair<std::string, int>> parts;
  auto flush = [&]() {
    if (token.empty())
      throw Error(ErrorKind::parse_error, "empty letter in word: " + text);
    int sign = +1;
    std::string sym = token;
    if (sym[0] == '-') {
      sign = -1;
      sym.erase(0, 1);
    }
    if (sym.empty())
      throw Error(ErrorKind::parse_error, "bare sign in word: " + text);
    parts.push_back({sym, sign});
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') flush();
    else token += c;
  }
  flush();
  if (parts.front().second < 0)
    throw Error(ErrorKind::parse_error, "base letter cannot carry a sign: " + text);
  w.base = parts.front().first;
  w.ops.assign(parts.begin() + 1, parts.end());
  return w;
}

std::string format_quandle_word(const QuandleWord& w) {
  std::string out = w.base;
  for (const auto& [sym, sign] : w.ops) {
    out += '*';
    if (sign < 0) out += '-';
    out += sym;
  }
  return out;
}

FreeQuandleElement free_normalize(const QuandleWord& w) {
  // The left-associated word is the conjugate (a_n^{e_n} ... a_1^{e_1}) base (...)^{-1}.
  std::vector<std::pair<std::string, int>> conj;
  for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) conj.push_back(*it);
  FreeQuandleElement e;
  e.base = w.base;
  e.conjugator = free_reduce(std::move(conj));
  while (!e.conjugator.letters.empty() &&
         e.conjugator.letters.back().first == e.base)
    e.conjugator.letters.pop_back();
  return e;
}

bool free_equal(const QuandleWord& a, const QuandleWord& b) {
  return free_normalize(a) == free_normalize(b);
}

QuandleWord free_expand(const FreeQuandleElement& e) {
  QuandleWord w;
  w.base = e.base;
  for (auto it = e.conjugator.letters.rbegin(); it != e.conjugator.letters.rend(); ++it)
    w.ops.push_back(*it);
  return w;
}

InvolutoryWord inv_normalize(std::vector<std::string> seq) {
  if (seq.empty()) throw Error(ErrorKind::bad_input, "empty involutory word");
  bool changed = true;
  while (changed) {
    changed = false;
    // x*s*s = x for applied letters
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      if (seq[i] == seq[i + 1]) {
        seq.erase(seq.begin() + i, seq.begin() + i + 2);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // s*s = s at the base
    if (seq.size() >= 2 && seq[0] == seq[1]) {
      seq.erase(seq.begin() + 1);
      changed = true;
    }
  }
  return InvolutoryWord{std::move(seq)};
}

InvolutoryWord inv_multiply(const InvolutoryWord& u, const InvolutoryWord& v) {
  // For v = y_m*y_{m-1}*...*y_1 (stored base first), the product appends
  // y_1,...,y_{m-1},y_m,y_{m-1},...,y_1 to u's word.
  std::vector<std::string> seq = u.letters;
  for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) seq.push_back(*it);
  for (std::size_t i = 1; i < v.letters.size(); ++i) seq.push_back(v.letters[i]);
  return inv_normalize(std::move(seq));
}

FreeGroupWord core_embed(const InvolutoryWord& u) {
  // Outermost applied letter is x_1; exponents alternate +1, -1, ... inward.
  const auto& l = u.letters;
  const int n = static_cast<int>(l.size());
  std::vector<std::pair<std::string, int>> letters;
  for (int i = 0; i < n; ++i) {
    int d = i % 2 == 0 ? +1 : -1;
    letters.push_back({l[n - 1 - i], d});
  }
  for (int i = n - 2; i >= 0; --i) {
    int d = i % 2 == 0 ? +1 : -1;
    letters.push_back({l[n - 1 - i], d});
  }
  return free_reduce(std::move(letters));
}

std::string format_involutory_word(const InvolutoryWord& w) {
  std::string out;
  for (const auto& s : w.letters) {
    if (!out.empty()) out += '*';
    out += s;
  }
  return out;
}

std::string format_probe_word(const ProbeWord& w, const std::string& x,
                              const std::string& y) {
  std::string out = w.base == 0 ? x : y;
  for (int s : w.ops) out += '*' + (s == 0 ? x : y);
  return out;
}

FreeQuandleModel::Elem FreeQuandleModel::op(const Elem& a, const Elem& b) const {
  // a*b = (w_b b) a (w_b b)^{-1} conjugation in the free group.
  FreeGroupWord b_word = free_mul(b.conjugator, free_mul(FreeGroupWord{{{b.base, 1}}},
                                                         free_inv(b.conjugator)));
  FreeQuandleElement r;
  r.base = a.base;
  r.conjugator = free_mul(b_word, a.conjugator);
  while (!r.conjugator.letters.empty() && r.conjugator.letters.back().first == r.base)
    r.conjugator.letters.pop_back();
  return r;
}

}  // namespace dehnkit
