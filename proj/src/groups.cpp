#include "dehnkit/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <numeric>
#include <sstream>

namespace dehnkit {

std::size_t group_cap_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("DEHNKIT_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<char> seen(images.size(), 0);
  for (int im : images) {
    if (im < 0 || im >= degree() || seen[im]) return false;
    seen[im] = 1;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& b) const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) r.images[i] = images[b.images[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
  return r;
}

Permutation parse_cycles(const std::string& text, int degree_hint) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = degree_hint - 1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw Error(ErrorKind::parse_error, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    std::string num;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        if (!num.empty()) {
          cycle.push_back(std::stoi(num));
          num.clear();
        }
      } else {
        throw Error(ErrorKind::parse_error, "bad character in cycle notation: " + text);
      }
    }
    if (i == text.size())
      throw Error(ErrorKind::parse_error, "unterminated cycle: " + text);
    ++i;  // ')'
    if (!num.empty()) cycle.push_back(std::stoi(num));
    for (int p : cycle) max_point = std::max(max_point, p);
    cycles.push_back(std::move(cycle));
  }
  Permutation p = Permutation::identity(max_point + 1);
  for (const auto& cycle : cycles) {
    std::vector<char> used(p.images.size(), 0);
    for (int pt : cycle) {
      if (used[pt])
        throw Error(ErrorKind::parse_error, "point repeated in cycle: " + text);
      used[pt] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!p.is_valid())
    throw Error(ErrorKind::parse_error, "cycles do not define a permutation: " + text);
  return p;
}

std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.images.size(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.images[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p.images[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// MatModN

namespace {

long long normalize_mod(long long x, long long n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

long long det_rec(const std::vector<long long>& a, int dim, long long mod) {
  if (dim == 1) return normalize_mod(a[0], mod);
  if (dim == 2) return normalize_mod(a[0] * a[3] - a[1] * a[2], mod);
  long long det = 0;
  std::vector<long long> minor(static_cast<std::size_t>(dim - 1) * (dim - 1));
  for (int c = 0; c < dim; ++c) {
    std::size_t k = 0;
    for (int r = 1; r < dim; ++r)
      for (int cc = 0; cc < dim; ++cc)
        if (cc != c) minor[k++] = a[static_cast<std::size_t>(r) * dim + cc];
    long long cof = det_rec(minor, dim - 1, mod);
    long long term = normalize_mod(a[c] * cof, mod);
    det = normalize_mod(det + (c % 2 == 0 ? term : mod - term), mod);
  }
  return det;
}

}  // namespace

long long mod_inverse(long long x, long long n) {
  long long a = normalize_mod(x, n), b = n;
  long long u = 1, v = 0;
  while (b != 0) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1)
    throw Error(ErrorKind::bad_input,
                std::to_string(x) + " is not a unit mod " + std::to_string(n));
  return normalize_mod(u, n);
}

MatModN MatModN::identity(int dim, long long mod) {
  MatModN m;
  m.dim = dim;
  m.mod = mod;
  m.a.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1 % mod;
  return m;
}

MatModN MatModN::mul(const MatModN& o) const {
  MatModN r;
  r.dim = dim;
  r.mod = mod;
  r.a.assign(a.size(), 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < dim; ++j)
        r.at(i, j) = normalize_mod(r.at(i, j) + v * o.at(k, j), mod);
    }
  return r;
}

long long MatModN::det() const { return det_rec(a, dim, mod); }

bool MatModN::is_identity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (at(i, j) != (i == j ? 1 % mod : 0)) return false;
  return true;
}

MatModN MatModN::inverse() const {
  long long d = det();
  long long dinv = mod_inverse(d, mod);
  MatModN r;
  r.dim = dim;
  r.mod = mod;
  r.a.assign(a.size(), 0);
  if (dim == 1) {
    r.a[0] = dinv;
    return r;
  }
  std::vector<long long> minor(static_cast<std::size_t>(dim - 1) * (dim - 1));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::size_t k = 0;
      for (int rr = 0; rr < dim; ++rr) {
        if (rr == i) continue;
        for (int cc = 0; cc < dim; ++cc)
          if (cc != j) minor[k++] = a[static_cast<std::size_t>(rr) * dim + cc];
      }
      long long cof = det_rec(minor, dim - 1, mod);
      if ((i + j) % 2 == 1) cof = normalize_mod(mod - cof, mod);
      r.at(j, i) = normalize_mod(cof * dinv, mod);  // adjugate transposes
    }
  return r;
}

MatModN parse_matrix(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos || text.find("mod=") == std::string::npos)
    throw Error(ErrorKind::parse_error, "matrix must look like 'mod=3; 1 1 / 0 1'");
  std::string head = text.substr(0, semi);
  long long mod = std::stoll(head.substr(head.find("mod=") + 4));
  if (mod < 2) throw Error(ErrorKind::parse_error, "matrix modulus must be >= 2");
  std::vector<std::vector<long long>> rows(1);
  std::istringstream body(text.substr(semi + 1));
  std::string tok;
  while (body >> tok) {
    if (tok == "/") {
      rows.emplace_back();
    } else {
      rows.back().push_back(normalize_mod(std::stoll(tok), mod));
    }
  }
  int dim = static_cast<int>(rows.size());
  MatModN m;
  m.dim = dim;
  m.mod = mod;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim)
      throw Error(ErrorKind::parse_error, "matrix rows must be square: " + text);
    m.a.insert(m.a.end(), row.begin(), row.end());
  }
  if (std::gcd(m.det(), mod) != 1)
    throw Error(ErrorKind::parse_error, "matrix determinant is not a unit: " + text);
  return m;
}

std::string format_matrix(const MatModN& m) {
  std::string out = "mod=" + std::to_string(m.mod) + ";";
  for (int i = 0; i < m.dim; ++i) {
    if (i) out += " /";
    for (int j = 0; j < m.dim; ++j) out += ' ' + std::to_string(m.at(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

std::string encode_ints(const std::vector<int>& v) {
  std::string s(v.size() * sizeof(int), '\0');
  std::memcpy(s.data(), v.data(), s.size());
  return s;
}

std::string encode_lls(const std::vector<long long>& v) {
  std::string s(v.size() * sizeof(long long), '\0');
  std::memcpy(s.data(), v.data(), s.size());
  return s;
}

}  // namespace

std::string FiniteGroup::encode(int i) const {
  return carrier_ == Carrier::permutation ? encode_ints(perms_[i].images)
                                          : encode_lls(mats_[i].a);
}

std::optional<int> FiniteGroup::lookup(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::size() const {
  return carrier_ == Carrier::permutation ? perms_.size() : mats_.size();
}

FiniteGroup::FiniteGroup() {
  perms_.push_back(Permutation::identity(1));
  index_[encode(0)] = 0;
  inverse_cache_.assign(1, 0);
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> gens,
                                           std::size_t cap) {
  for (const auto& g : gens) {
    if (!g.is_valid())
      throw Error(ErrorKind::bad_input, "generator is not a permutation");
    if (g.degree() != gens.front().degree())
      throw Error(ErrorKind::mixed_carriers, "permutation degrees differ");
  }
  FiniteGroup g{Unbuilt{}};
  g.carrier_ = Carrier::permutation;
  int degree = gens.empty() ? 1 : gens.front().degree();
  g.perms_.push_back(Permutation::identity(degree));
  for (auto& gen : gens) g.perms_.push_back(std::move(gen));
  g.build(cap);
  return g;
}

FiniteGroup FiniteGroup::from_matrices(std::vector<MatModN> gens, std::size_t cap) {
  if (gens.empty())
    throw Error(ErrorKind::bad_input, "matrix group needs at least one generator");
  for (const auto& g : gens) {
    if (g.dim != gens.front().dim || g.mod != gens.front().mod)
      throw Error(ErrorKind::mixed_carriers, "matrix shapes or moduli differ");
    if (std::gcd(g.det(), g.mod) != 1)
      throw Error(ErrorKind::bad_input, "generator determinant is not a unit");
  }
  FiniteGroup g{Unbuilt{}};
  g.carrier_ = Carrier::matrix;
  g.mats_.push_back(MatModN::identity(gens.front().dim, gens.front().mod));
  for (auto& gen : gens) g.mats_.push_back(std::move(gen));
  g.build(cap);
  return g;
}

void FiniteGroup::build(std::size_t cap) {
  // Candidates 1..k hold the raw generators; dedup against the identity and
  // each other, then close under right multiplication (breadth-first, so the
  // element order is deterministic).
  std::size_t raw = size();
  std::vector<int> keep;
  index_.clear();
  index_[encode(0)] = 0;
  std::vector<Permutation> uperms;
  std::vector<MatModN> umats;
  if (carrier_ == Carrier::permutation) uperms.push_back(perms_[0]);
  else umats.push_back(mats_[0]);
  generators_.clear();
  for (std::size_t i = 1; i < raw; ++i) {
    std::string key = encode(static_cast<int>(i));
    auto it = index_.find(key);
    if (it != index_.end()) {
      generators_.push_back(it->second);
      continue;
    }
    int id = static_cast<int>(carrier_ == Carrier::permutation ? uperms.size()
                                                               : umats.size());
    index_[key] = id;
    if (carrier_ == Carrier::permutation) uperms.push_back(perms_[i]);
    else umats.push_back(mats_[i]);
    generators_.push_back(id);
  }
  perms_ = std::move(uperms);
  mats_ = std::move(umats);

  std::vector<int> gen_ids;
  for (int gi : generators_)
    if (gi != 0 && std::find(gen_ids.begin(), gen_ids.end(), gi) == gen_ids.end())
      gen_ids.push_back(gi);

  for (std::size_t head = 0; head < size(); ++head) {
    for (int gi : gen_ids) {
      if (carrier_ == Carrier::permutation) {
        Permutation p = perms_[head].compose(perms_[gi]);
        std::string key = encode_ints(p.images);
        if (!index_.count(key)) {
          if (size() >= cap)
            throw Error(ErrorKind::cap_exceeded,
                        "group closure exceeded cap " + std::to_string(cap));
          index_[key] = static_cast<int>(perms_.size());
          perms_.push_back(std::move(p));
        }
      } else {
        MatModN m = mats_[head].mul(mats_[gi]);
        std::string key = encode_lls(m.a);
        if (!index_.count(key)) {
          if (size() >= cap)
            throw Error(ErrorKind::cap_exceeded,
                        "group closure exceeded cap " + std::to_string(cap));
          index_[key] = static_cast<int>(mats_.size());
          mats_.push_back(std::move(m));
        }
      }
    }
  }
  inverse_cache_.assign(size(), -1);
}

int FiniteGroup::mul(int i, int j) const {
  if (carrier_ == Carrier::permutation) {
    auto key = encode_ints(perms_[i].compose(perms_[j]).images);
    return index_.at(key);
  }
  auto key = encode_lls(mats_[i].mul(mats_[j]).a);
  return index_.at(key);
}

int FiniteGroup::inv(int i) const {
  if (inverse_cache_[i] >= 0) return inverse_cache_[i];
  int r;
  if (carrier_ == Carrier::permutation) {
    r = index_.at(encode_ints(perms_[i].inverse().images));
  } else {
    r = index_.at(encode_lls(mats_[i].inverse().a));
  }
  inverse_cache_[i] = r;
  inverse_cache_[r] = i;
  return r;
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto r = lookup(encode_ints(p.images));
  if (!r) throw Error(ErrorKind::bad_input, "permutation not in group");
  return *r;
}

int FiniteGroup::index_of(const MatModN& m) const {
  auto r = lookup(encode_lls(m.a));
  if (!r) throw Error(ErrorKind::bad_input, "matrix not in group");
  return *r;
}

std::string FiniteGroup::element_name(int i) const {
  return carrier_ == Carrier::permutation ? to_cycles(perms_[i])
                                          : format_matrix(mats_[i]);
}

GeneratorSet parse_generators(const std::string& text) {
  GeneratorSet gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.find("mod=") == 0) {
      gens.mats.push_back(parse_matrix(line));
    } else {
      gens.perms.push_back(parse_cycles(line));
    }
  }
  if (!gens.perms.empty() && !gens.mats.empty())
    throw Error(ErrorKind::mixed_carriers,
                "cannot mix permutation and matrix generators");
  if (gens.perms.empty() && gens.mats.empty())
    throw Error(ErrorKind::parse_error, "no generators found");
  if (gens.is_permutation()) {
    int degree = 0;
    for (const auto& p : gens.perms) degree = std::max(degree, p.degree());
    for (auto& p : gens.perms)
      while (p.degree() < degree) p.images.push_back(p.degree());
  }
  return gens;
}

FiniteGroup generate_group(const GeneratorSet& gens, std::size_t cap) {
  return gens.is_permutation() ? FiniteGroup::from_permutations(gens.perms, cap)
                               : FiniteGroup::from_matrices(gens.mats, cap);
}

std::vector<int> conjugacy_class(const FiniteGroup& g, int x) {
  // Orbit of x under conjugation by the generators.
  std::vector<char> seen(g.size(), 0);
  std::deque<int> queue{x};
  seen[x] = 1;
  std::vector<int> out;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    out.push_back(e);
    for (int gi : g.generator_indices()) {
      int c = g.mul(g.mul(gi, e), g.inv(gi));
      if (!seen[c]) {
        seen[c] = 1;
        queue.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    bool central = true;
    for (int gi : g.generator_indices()) {
      if (g.mul(static_cast<int>(x), gi) != g.mul(gi, static_cast<int>(x))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(static_cast<int>(x));
  }
  return out;
}

FiniteGroup quotient_by_center(const FiniteGroup& g) {
  std::vector<int> z = center(g);
  std::vector<int> coset_of(g.size(), -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int zi : z) coset_of[g.mul(static_cast<int>(x), zi)] = c;
  }
  // Regular action of the generator cosets on the coset space; faithful since
  // the center is exactly the kernel of the conjugation action and here we
  // act by translation on G/Z.
  std::vector<Permutation> gen_perms;
  for (int gi : g.generator_indices()) {
    Permutation p;
    p.images.resize(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      p.images[c] = coset_of[g.mul(reps[c], gi)];
    gen_perms.push_back(std::move(p));
  }
  if (gen_perms.empty()) gen_perms.push_back(Permutation::identity(1));
  return FiniteGroup::from_permutations(gen_perms);
}

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  int e = x;
  while (e != g.identity()) {
    e = g.mul(e, x);
    ++k;
  }
  return k;
}

namespace {

std::vector<char> closure_mask(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.size(), 0);
  std::deque<int> queue;
  in[g.identity()] = 1;
  queue.push_back(g.identity());
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int s : seed) {
      int p = g.mul(e, s);
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::size_t covered = 1;
  while (covered < g.size()) {
    int best = -1;
    std::size_t best_cover = covered;
    for (std::size_t x = 1; x < g.size(); ++x) {
      std::vector<int> trial = gens;
      trial.push_back(static_cast<int>(x));
      auto mask = closure_mask(g, trial);
      std::size_t cover = static_cast<std::size_t>(
          std::count(mask.begin(), mask.end(), 1));
      if (cover > best_cover) {
        best_cover = cover;
        best = static_cast<int>(x);
        if (cover == g.size()) break;
      }
    }
    gens.push_back(best);
    covered = best_cover;
  }
  return gens;
}

namespace {

// Extend a partial generator assignment to the full closure; fails on any
// multiplicative inconsistency or non-injectivity.
bool extend_group_map(const FiniteGroup& a, const FiniteGroup& b,
                      const std::vector<int>& gens, const std::vector<int>& images,
                      std::vector<int>& out) {
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  map[a.identity()] = b.identity();
  used[b.identity()] = 1;
  std::deque<int> queue{a.identity()};
  std::vector<int> known{a.identity()};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] == -1) {
      if (used[images[i]]) return false;
      map[gens[i]] = images[i];
      used[images[i]] = 1;
      queue.push_back(gens[i]);
      known.push_back(gens[i]);
    } else if (map[gens[i]] != images[i]) {
      return false;
    }
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = a.mul(x, gens[i]);
      int fy = b.mul(map[x], images[i]);
      if (map[y] == -1) {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
        known.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  for (int v : map)
    if (v == -1) return false;  // generators did not generate
  out = std::move(map);
  return true;
}

bool group_iso_search(const FiniteGroup& a, const FiniteGroup& b,
                      const std::vector<int>& gens, std::size_t pos,
                      std::vector<int>& images,
                      const std::vector<std::vector<int>>& candidates,
                      std::vector<int>& out) {
  if (pos == gens.size()) return extend_group_map(a, b, gens, images, out);
  for (int cand : candidates[pos]) {
    images[pos] = cand;
    // Cheap pairwise consistency before the full extension: products of the
    // assigned generators must have matching orders.
    bool ok = true;
    for (std::size_t j = 0; j < pos && ok; ++j) {
      int pa = a.mul(gens[j], gens[pos]);
      int pb = b.mul(images[j], cand);
      ok = element_order(a, pa) == element_order(b, pb);
    }
    if (!ok) continue;
    if (group_iso_search(a, b, gens, pos + 1, images, candidates, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> gens = small_generating_set(a);
  if (gens.empty()) {
    return std::vector<int>{b.identity()};
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = element_order(a, gens[i]);
    for (std::size_t y = 0; y < b.size(); ++y)
      if (element_order(b, static_cast<int>(y)) == ord)
        candidates[i].push_back(static_cast<int>(y));
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<int> images(gens.size(), -1), out;
  if (group_iso_search(a, b, gens, 0, images, candidates, out)) return out;
  return std::nullopt;
}

FiniteGroup symmetric_group(int n) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Permutation p = Permutation::identity(n);
    std::swap(p.images[i], p.images[i + 1]);
    gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(std::max(n, 1)));
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup cyclic_group(int n) {
  Permutation p = Permutation::identity(n);
  for (int i = 0; i < n; ++i) p.images[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({p});
}

FiniteGroup dihedral_group(int n) {
  Permutation rot = Permutation::identity(n);
  for (int i = 0; i < n; ++i) rot.images[i] = (i + 1) % n;
  Permutation flip = Permutation::identity(n);
  for (int i = 0; i < n; ++i) flip.images[i] = (n - i) % n;
  return FiniteGroup::from_permutations({rot, flip});
}

FiniteGroup sl2(long long q) {
  MatModN u = MatModN::identity(2, q);
  u.at(0, 1) = 1;
  MatModN l = MatModN::identity(2, q);
  l.at(1, 0) = 1;
  return FiniteGroup::from_matrices({u, l});
}

}  // namespace dehnkit
