#include "dehnkit/knots.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dehnkit {

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  bool arcs_given = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "arcs") {
      if (!(ls >> d.arcs) || d.arcs < 1)
        throw Error(ErrorKind::parse_error,
                    "line " + std::to_string(lineno) + ": bad arc count");
      arcs_given = true;
    } else if (head == "c") {
      Crossing c;
      std::string sign;
      if (!(ls >> c.over >> c.under_in >> c.under_out >> sign) ||
          (sign != "+" && sign != "-"))
        throw Error(ErrorKind::parse_error,
                    "line " + std::to_string(lineno) +
                        ": expected 'c <over> <under_in> <under_out> <+|->'");
      c.sign = sign == "+" ? +1 : -1;
      d.crossings.push_back(c);
    } else {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lineno) + ": unknown directive " + head);
    }
  }
  if (!arcs_given) {
    int max_arc = -1;
    for (const auto& c : d.crossings)
      max_arc = std::max({max_arc, c.over, c.under_in, c.under_out});
    if (max_arc < 0)
      throw Error(ErrorKind::parse_error,
                  "empty diagram needs an explicit 'arcs N' line");
    d.arcs = max_arc + 1;
  }
  std::vector<int> as_in(d.arcs, 0), as_out(d.arcs, 0);
  for (const auto& c : d.crossings) {
    for (int a : {c.over, c.under_in, c.under_out})
      if (a < 0 || a >= d.arcs)
        throw Error(ErrorKind::invalid_arc_usage,
                    "arc index out of range: " + std::to_string(a));
    ++as_in[c.under_in];
    ++as_out[c.under_out];
  }
  if (!d.crossings.empty()) {
    for (int a = 0; a < d.arcs; ++a)
      if (as_in[a] != 1 || as_out[a] != 1)
        throw Error(ErrorKind::invalid_arc_usage,
                    "arc " + std::to_string(a) +
                        " must appear exactly once as under_in and under_out");
  }
  return d;
}

std::int64_t coloring_count(const Diagram& d, const FiniteQuandle& q, int bound) {
  if (q.n > bound)
    throw Error(ErrorKind::bound_exceeded,
                "coloring bound exceeded: " + std::to_string(q.n));
  // Backtracking over arc colors with forward checking through crossings.
  std::vector<int> color(d.arcs, -1);
  std::int64_t count = 0;
  auto consistent = [&](const Crossing& c) {
    if (color[c.over] < 0 || color[c.under_in] < 0 || color[c.under_out] < 0)
      return true;
    int expect = c.sign > 0 ? q.table[color[c.under_in]][color[c.over]]
                            : q.dual_op(color[c.under_in], color[c.over]);
    return color[c.under_out] == expect;
  };
  std::function<void(int)> assign = [&](int arc) {
    if (arc == d.arcs) {
      ++count;
      return;
    }
    for (int col = 0; col < q.n; ++col) {
      color[arc] = col;
      bool ok = true;
      for (const auto& c : d.crossings)
        if (!consistent(c)) {
          ok = false;
          break;
        }
      if (ok) assign(arc + 1);
      color[arc] = -1;
    }
  };
  assign(0);
  return count;
}

namespace {

PrimitiveClass torus_class(long long a, long long b) {
  return canonical_class({a, b}, 0);
}

}  // namespace

TrefoilReport trefoil_torus_check(int bound) {
  if (bound < 1) throw Error(ErrorKind::bad_input, "bound must be >= 1");
  TrefoilReport out;
  PrimitiveClass a = torus_class(1, 0), b = torus_class(0, 1);

  // (a) the braid relations a*b*a = b and b*a*b = a.
  out.braid_relations = hclass_op(hclass_op(a, b), a) == b &&
                        hclass_op(hclass_op(b, a), b) == a;

  // (b) every primitive class with |entries| <= bound is reachable from
  // {a, b} under * and *^{-1}; intermediates are allowed one wider box.
  // Each reached class keeps its derivation, re-evaluated afterwards.
  std::set<PrimitiveClass> targets;
  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      targets.insert(torus_class(p, q));
    }
  long long work = 2 * bound + 2;
  struct Derivation {
    PrimitiveClass x, y;
    int dual;  // 0: x*y, 1: x dual y
  };
  std::map<PrimitiveClass, Derivation> derivation;
  std::set<PrimitiveClass> reached{a, b};
  std::vector<PrimitiveClass> frontier{a, b};
  while (!frontier.empty()) {
    std::vector<PrimitiveClass> next;
    for (const auto& x : frontier) {
      std::vector<PrimitiveClass> all(reached.begin(), reached.end());
      for (const auto& y : all) {
        const std::array<std::pair<PrimitiveClass, Derivation>, 4> steps{{
            {hclass_op(x, y), {x, y, 0}},
            {hclass_dual(x, y), {x, y, 1}},
            {hclass_op(y, x), {y, x, 0}},
            {hclass_dual(y, x), {y, x, 1}},
        }};
        for (const auto& [z, how] : steps) {
          bool small = true;
          for (long long e : z.v) small = small && std::llabs(e) <= work;
          if (small && reached.insert(z).second) {
            derivation.emplace(z, how);
            next.push_back(z);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  out.classes_expected = static_cast<int>(targets.size());
  out.classes_reached = 0;
  for (const auto& t : targets)
    if (reached.count(t)) ++out.classes_reached;
  bool witnesses_ok = true;
  for (const auto& [z, how] : derivation) {
    PrimitiveClass again = how.dual ? hclass_dual(how.x, how.y) : hclass_op(how.x, how.y);
    witnesses_ok = witnesses_ok && again == z;
  }
  out.generation = out.classes_reached == out.classes_expected && witnesses_ok;

  // (c) the only collisions among positive words of length <= 3 are the two
  // braid identities.
  HClassModel model;
  auto collision = freeness_probe(model, a, b, 3);
  out.freeness = false;
  if (collision) {
    const ProbeWord& e = collision->earlier;
    const ProbeWord& l = collision->later;
    out.first_collision = format_probe_word(e, "a", "b") + " = " +
                          format_probe_word(l, "a", "b");
    // First collision must be the braid relation b = a*b*a.
    bool earlier_is_b = e.base == 1 && e.ops.empty();
    bool later_is_aba = l.base == 0 && l.ops == std::vector<int>{1, 0};
    out.freeness = earlier_is_b && later_is_aba;
  }
  return out;
}

TwoGenReport two_generator_structure(const PrimitiveClass& x, const PrimitiveClass& y,
                                     int depth) {
  if (x.genus() != 1 || y.genus() != 1 || x.mod != 0 || y.mod != 0)
    throw Error(ErrorKind::bad_input,
                "two-generator classification runs in the integral genus-one model");
  TwoGenReport out;
  out.ihat = intersection_form(x.v, y.v, 0);
  long long abs_i = std::llabs(out.ihat);
  if (abs_i == 0) {
    // In genus one two distinct primitive classes never have i^ = 0, so this
    // is the same class; idempotence gives the trivial relations.
    out.kind = TwoGenKind::trivial;
    out.verified = x == y && hclass_op(x, y) == x && hclass_op(y, x) == y;
    out.detail = "same class; x*y = x and y*x = y";
    return out;
  }
  if (abs_i == 1) {
    out.kind = TwoGenKind::braid;
    out.verified = hclass_op(hclass_op(x, y), x) == y &&
                   hclass_op(hclass_op(y, x), y) == x;
    out.detail = "braid relations x*y*x = y and y*x*y = x";
    return out;
  }
  out.kind = TwoGenKind::free_up_to_depth;
  HClassModel model;
  auto collision = freeness_probe(model, x, y, depth);
  out.verified = !collision.has_value();
  out.detail = out.verified
                   ? "no relation among positive normal forms up to length " +
                         std::to_string(depth)
                   : "collision: " + format_probe_word(collision->earlier, "x", "y") +
                         " = " + format_probe_word(collision->later, "x", "y");
  return out;
}

}  // namespace dehnkit
