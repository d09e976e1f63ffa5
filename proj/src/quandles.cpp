#include "dehnkit/quandles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dehnkit {

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  switch (axiom) {
    case Axiom::idempotence:
      out << "idempotence fails at x=" << x;
      break;
    case Axiom::right_bijectivity:
      out << "right translation by y=" << y << " is not a bijection";
      break;
    case Axiom::distributivity:
      out << "(x*y)*z != (x*z)*(y*z) at x=" << x << " y=" << y << " z=" << z;
      break;
  }
  return out.str();
}

int FiniteQuandle::dual_op(int x, int y) const {
  for (int z = 0; z < n; ++z)
    if (table[z][y] == x) return z;
  return -1;  // unreachable on validated tables
}

std::string FiniteQuandle::label(int x) const {
  return labels.empty() ? std::to_string(x) : labels[x];
}

std::optional<AxiomViolation> check_axioms(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(table[x].size()) != n)
      return AxiomViolation{AxiomViolation::Axiom::right_bijectivity, x, -1, -1};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        return AxiomViolation{AxiomViolation::Axiom::right_bijectivity, x, y, -1};
  for (int x = 0; x < n; ++x)
    if (table[x][x] != x)
      return AxiomViolation{AxiomViolation::Axiom::idempotence, x, -1, -1};
  for (int y = 0; y < n; ++y) {
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (hit[table[x][y]])
        return AxiomViolation{AxiomViolation::Axiom::right_bijectivity, x, y, -1};
      hit[table[x][y]] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
          return AxiomViolation{AxiomViolation::Axiom::distributivity, x, y, z};
  return std::nullopt;
}

FiniteQuandle make_quandle(std::vector<std::vector<int>> table,
                           std::vector<std::string> labels) {
  if (auto violation = check_axioms(table))
    throw Error(ErrorKind::axiom_violation, violation->describe());
  FiniteQuandle q;
  q.n = static_cast<int>(table.size());
  q.table = std::move(table);
  q.labels = std::move(labels);
  return q;
}

FiniteQuandle trivial_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(t[x].begin(), t[x].end(), x);
  return make_quandle(std::move(t));
}

FiniteQuandle dihedral_quandle(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  return make_quandle(std::move(t));
}

std::vector<std::vector<int>> components(const FiniteQuandle& q) {
  std::vector<int> parent(q.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) {
      int a = find(x), b = find(q.table[x][y]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> orbit;
  for (int x = 0; x < q.n; ++x) orbit[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : orbit) out.push_back(std::move(members));
  return out;
}

namespace {

Permutation column(const FiniteQuandle& q, int y) {
  Permutation p;
  p.images.resize(q.n);
  for (int x = 0; x < q.n; ++x) p.images[x] = q.table[x][y];
  return p;
}

}  // namespace

FiniteGroup inner_group(const FiniteQuandle& q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (int y = 0; y < q.n; ++y) gens.push_back(column(q, y));
  if (gens.empty()) gens.push_back(Permutation::identity(1));
  return FiniteGroup::from_permutations(std::move(gens), cap);
}

int quandle_exponent(const FiniteQuandle& q) {
  long long e = 1;
  for (int y = 0; y < q.n; ++y) {
    Permutation p = column(q, y);
    // order of the column permutation
    Permutation acc = p;
    int ord = 1;
    while (!acc.is_identity()) {
      acc = acc.compose(p);
      ++ord;
    }
    e = std::lcm(e, static_cast<long long>(ord));
  }
  return static_cast<int>(e);
}

bool is_faithful(const FiniteQuandle& q) {
  std::vector<std::vector<int>> cols;
  for (int y = 0; y < q.n; ++y) cols.push_back(column(q, y).images);
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

std::vector<int> subquandle_generated(const FiniteQuandle& q,
                                      const std::vector<int>& seeds) {
  std::vector<char> in(q.n, 0);
  std::deque<int> queue;
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  std::vector<int> members(queue.begin(), queue.end());
  for (std::size_t head = 0; head < members.size(); ++head) {
    int x = members[head];
    std::size_t m = members.size();
    for (std::size_t i = 0; i < m; ++i) {
      int y = members[i];
      for (int z : {q.table[x][y], q.table[y][x], q.dual_op(x, y), q.dual_op(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> minimal_generating_set(const FiniteQuandle& q) {
  std::vector<int> gens;
  std::vector<char> covered(q.n, 0);
  int covered_count = 0;
  while (covered_count < q.n) {
    int best = -1, best_cover = covered_count;
    for (int x = 0; x < q.n; ++x) {
      if (covered[x]) continue;
      std::vector<int> trial = gens;
      trial.push_back(x);
      int cover = static_cast<int>(subquandle_generated(q, trial).size());
      if (cover > best_cover) {
        best_cover = cover;
        best = x;
        if (cover == q.n) break;
      }
    }
    gens.push_back(best);  // any uncovered element enlarges the closure
    covered_count = best_cover;
    covered.assign(q.n, 0);
    for (int x : subquandle_generated(q, gens)) covered[x] = 1;
  }
  return gens;
}

namespace {

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<char> seen(p.images.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p.images[j];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

struct IsoContext {
  const FiniteQuandle& a;
  const FiniteQuandle& b;
  std::vector<int> gens;                      // generating set of a
  std::vector<std::vector<int>> candidates;   // per generator
};

// Forced extension of the first `assigned` generator images through the
// subquandle closure; with require_full also demands coverage of all of a
// plus a final full homomorphism check.
bool extend_quandle_map(const IsoContext& ctx, const std::vector<int>& images,
                        std::size_t assigned, bool require_full,
                        std::vector<int>& out) {
  const FiniteQuandle& a = ctx.a;
  const FiniteQuandle& b = ctx.b;
  std::vector<int> map(a.n, -1);
  std::vector<char> used(b.n, 0);
  std::vector<int> known;
  for (std::size_t i = 0; i < assigned; ++i) {
    int g = ctx.gens[i], im = images[i];
    if (map[g] == -1) {
      if (used[im]) return false;
      map[g] = im;
      used[im] = 1;
      known.push_back(g);
    } else if (map[g] != im) {
      return false;
    }
  }
  for (std::size_t head = 0; head < known.size(); ++head) {
    int x = known[head];
    std::size_t m = known.size();
    for (std::size_t i = 0; i < m; ++i) {
      int y = known[i];
      int pairs[2][2] = {{x, y}, {y, x}};
      for (auto& p : pairs) {
        int z = a.table[p[0]][p[1]];
        int fz = b.table[map[p[0]]][map[p[1]]];
        if (map[z] == -1) {
          if (used[fz]) return false;
          map[z] = fz;
          used[fz] = 1;
          known.push_back(z);
        } else if (map[z] != fz) {
          return false;
        }
      }
    }
  }
  if (!require_full) return true;
  if (static_cast<int>(known.size()) != a.n) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (map[a.table[x][y]] != b.table[map[x]][map[y]]) return false;
  out = std::move(map);
  return true;
}

bool quandle_iso_search(const IsoContext& ctx, std::size_t pos,
                        std::vector<int>& images, std::vector<int>& out) {
  if (pos == ctx.gens.size())
    return extend_quandle_map(ctx, images, pos, true, out);
  for (int cand : ctx.candidates[pos]) {
    bool clash = false;
    for (std::size_t j = 0; j < pos && !clash; ++j) clash = images[j] == cand;
    if (clash) continue;
    images[pos] = cand;
    std::vector<int> ignore;
    if (!extend_quandle_map(ctx, images, pos + 1, false, ignore)) continue;
    if (quandle_iso_search(ctx, pos + 1, images, out)) return true;
  }
  images[pos] = -1;
  return false;
}

std::vector<std::size_t> component_size_profile(const FiniteQuandle& q,
                                                std::vector<int>& comp_of,
                                                std::vector<std::size_t>& comp_size) {
  auto comps = components(q);
  comp_of.assign(q.n, -1);
  comp_size.assign(comps.size(), 0);
  std::vector<std::size_t> profile;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    comp_size[c] = comps[c].size();
    for (int x : comps[c]) comp_of[x] = static_cast<int>(c);
    profile.push_back(comps[c].size());
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b,
                                                 int bound) {
  if (a.n != b.n) return std::nullopt;
  if (a.n > bound)
    throw Error(ErrorKind::bound_exceeded,
                "isomorphism search bound exceeded: " + std::to_string(a.n));
  if (a.n == 0) return std::vector<int>{};

  // Identity candidate first.
  if (a.table == b.table) {
    std::vector<int> id(a.n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  std::vector<int> comp_of_a, comp_of_b;
  std::vector<std::size_t> size_a, size_b;
  if (component_size_profile(a, comp_of_a, size_a) !=
      component_size_profile(b, comp_of_b, size_b))
    return std::nullopt;

  std::vector<std::vector<int>> types_a(a.n), types_b(b.n);
  {
    std::map<std::vector<int>, int> hist_a, hist_b;
    for (int x = 0; x < a.n; ++x) {
      types_a[x] = cycle_type(column(a, x));
      ++hist_a[types_a[x]];
    }
    for (int x = 0; x < b.n; ++x) {
      types_b[x] = cycle_type(column(b, x));
      ++hist_b[types_b[x]];
    }
    if (hist_a != hist_b) return std::nullopt;
  }

  IsoContext ctx{a, b, minimal_generating_set(a), {}};
  ctx.candidates.resize(ctx.gens.size());
  for (std::size_t i = 0; i < ctx.gens.size(); ++i) {
    int g = ctx.gens[i];
    for (int y = 0; y < b.n; ++y)
      if (types_b[y] == types_a[g] &&
          size_b[comp_of_b[y]] == size_a[comp_of_a[g]])
        ctx.candidates[i].push_back(y);
    if (ctx.candidates[i].empty()) return std::nullopt;
  }
  std::vector<int> images(ctx.gens.size(), -1), out;
  if (quandle_iso_search(ctx, 0, images, out)) return out;
  return std::nullopt;
}

FiniteGroup aut_group(const FiniteQuandle& q, int bound) {
  if (q.n > bound)
    throw Error(ErrorKind::bound_exceeded,
                "aut search bound exceeded: " + std::to_string(q.n));
  std::vector<int> comp_of;
  std::vector<std::size_t> comp_size;
  component_size_profile(q, comp_of, comp_size);
  std::vector<std::vector<int>> types(q.n);
  for (int x = 0; x < q.n; ++x) types[x] = cycle_type(column(q, x));

  IsoContext ctx{q, q, minimal_generating_set(q), {}};
  ctx.candidates.resize(ctx.gens.size());
  for (std::size_t i = 0; i < ctx.gens.size(); ++i) {
    int g = ctx.gens[i];
    for (int y = 0; y < q.n; ++y)
      if (types[y] == types[g] && comp_size[comp_of[y]] == comp_size[comp_of[g]])
        ctx.candidates[i].push_back(y);
  }

  std::vector<Permutation> autos;
  std::vector<int> images(ctx.gens.size(), -1);
  std::function<void(std::size_t)> enumerate = [&](std::size_t pos) {
    if (pos == ctx.gens.size()) {
      std::vector<int> map;
      if (extend_quandle_map(ctx, images, pos, true, map))
        autos.push_back(Permutation{std::move(map)});
      return;
    }
    for (int cand : ctx.candidates[pos]) {
      bool clash = false;
      for (std::size_t j = 0; j < pos && !clash; ++j) clash = images[j] == cand;
      if (clash) continue;
      images[pos] = cand;
      std::vector<int> ignore;
      if (extend_quandle_map(ctx, images, pos + 1, false, ignore))
        enumerate(pos + 1);
    }
    images[pos] = -1;
  };
  enumerate(0);
  if (autos.empty()) autos.push_back(Permutation::identity(q.n));
  return FiniteGroup::from_permutations(std::move(autos));
}

namespace {

bool order_extends(const FiniteQuandle& q, const std::vector<int>& rank,
                   const std::vector<char>& placed, OrderSide side) {
  // rank[x] = position of x among placed elements; check monotonicity on all
  // fully placed pairs/translations. Right translations are bijective, so the
  // strict reading applies; left translations may merge, so ties pass.
  for (int x = 0; x < q.n; ++x) {
    if (!placed[x]) continue;
    for (int y = 0; y < q.n; ++y) {
      if (!placed[y] || rank[x] >= rank[y]) continue;
      for (int z = 0; z < q.n; ++z) {
        if (!placed[z]) continue;
        if (side == OrderSide::right || side == OrderSide::bi) {
          int xz = q.table[x][z], yz = q.table[y][z];
          if (placed[xz] && placed[yz] && rank[xz] >= rank[yz]) return false;
        }
        if (side == OrderSide::left || side == OrderSide::bi) {
          int zx = q.table[z][x], zy = q.table[z][y];
          if (placed[zx] && placed[zy] && rank[zx] > rank[zy]) return false;
        }
      }
    }
  }
  return true;
}

bool order_search(const FiniteQuandle& q, OrderSide side, std::vector<int>& order,
                  std::vector<int>& rank, std::vector<char>& placed, int depth) {
  if (depth == q.n) return true;
  for (int x = 0; x < q.n; ++x) {
    if (placed[x]) continue;
    order[depth] = x;
    rank[x] = depth;
    placed[x] = 1;
    if (order_extends(q, rank, placed, side) &&
        order_search(q, side, order, rank, placed, depth + 1))
      return true;
    placed[x] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> search_linear_order(const FiniteQuandle& q,
                                                    OrderSide side, int bound) {
  if (q.n > bound)
    throw Error(ErrorKind::bound_exceeded,
                "order search bound exceeded: " + std::to_string(q.n));
  std::vector<int> order(q.n, -1), rank(q.n, -1);
  std::vector<char> placed(q.n, 0);
  if (order_search(q, side, order, rank, placed, 0)) return order;
  return std::nullopt;
}

std::optional<std::pair<int, int>> braid_pair_exists(const FiniteQuandle& q) {
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) {
      if (x == y) continue;
      if (q.table[q.table[x][y]][x] == y && q.table[q.table[y][x]][y] == x)
        return std::make_pair(x, y);
    }
  return std::nullopt;
}

FiniteQuandle product(const FiniteQuandle& a, const FiniteQuandle& b) {
  int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto id = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int x2 = 0; x2 < b.n; ++x2)
      for (int y1 = 0; y1 < a.n; ++y1)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[id(x1, x2)][id(y1, y2)] = id(a.table[x1][y1], b.table[x2][y2]);
  return make_quandle(std::move(t));
}

FiniteQuandle disjoint_union(const FiniteQuandle& a, const FiniteQuandle& b) {
  int n = a.n + b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool xa = x < a.n, ya = y < a.n;
      if (xa && ya) t[x][y] = a.table[x][y];
      else if (!xa && !ya) t[x][y] = a.n + b.table[x - a.n][y - a.n];
      else t[x][y] = x;  // cross-action is trivial
    }
  return make_quandle(std::move(t));
}

FiniteQuandle quandle_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(table.size()))
    throw Error(ErrorKind::parse_error, "size field disagrees with the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (!labels.empty() && labels.size() != table.size())
    throw Error(ErrorKind::parse_error, "labels length disagrees with the table");
  return make_quandle(std::move(table), std::move(labels));
}

std::string quandle_to_json_text(const FiniteQuandle& q) {
  nlohmann::json j;
  j["v"] = 1;
  j["size"] = q.n;
  j["table"] = q.table;
  if (!q.labels.empty()) j["labels"] = q.labels;
  return j.dump();
}

std::string quandle_to_csv(const FiniteQuandle& q) {
  std::ostringstream out;
  out << "*";
  for (int y = 0; y < q.n; ++y) out << ',' << q.label(y);
  out << '\n';
  for (int x = 0; x < q.n; ++x) {
    out << q.label(x);
    for (int y = 0; y < q.n; ++y) out << ',' << q.label(q.table[x][y]);
    out << '\n';
  }
  return out.str();
}

}  // namespace dehnkit
