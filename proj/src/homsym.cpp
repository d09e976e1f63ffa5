#include "dehnkit/homsym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dehnkit {

std::string format_class(const PrimitiveClass& c) {
  std::string out;
  for (std::size_t i = 0; i < c.v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.v[i]);
  }
  return out;
}

long long intersection_form(const std::vector<long long>& x,
                            const std::vector<long long>& y, long long mod) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw Error(ErrorKind::length_mismatch, "vectors must share an even length");
  long long s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2)
    s += x[i] * y[i + 1] - x[i + 1] * y[i];
  if (mod > 0) {
    s %= mod;
    if (s < 0) s += mod;
  }
  return s;
}

bool is_primitive(const std::vector<long long>& v, long long mod) {
  long long g = mod > 0 ? mod : 0;
  for (long long e : v) g = std::gcd(g, e);
  return g == 1;
}

PrimitiveClass canonical_class(std::vector<long long> v, long long mod) {
  if (mod > 0) {
    for (auto& e : v) {
      e %= mod;
      if (e < 0) e += mod;
    }
    std::vector<long long> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = (mod - v[i]) % mod;
    if (neg < v) v = std::move(neg);
  } else {
    for (long long e : v) {
      if (e > 0) break;
      if (e < 0) {
        for (auto& x : v) x = -x;
        break;
      }
    }
  }
  if (!is_primitive(v, mod))
    throw Error(ErrorKind::bad_input, "vector is not primitive");
  return PrimitiveClass{mod, std::move(v)};
}

PrimitiveClass hclass_op(const PrimitiveClass& x, const PrimitiveClass& y) {
  if (x.mod != y.mod)
    throw Error(ErrorKind::length_mismatch, "classes live over different rings");
  long long i = intersection_form(x.v, y.v, x.mod);
  std::vector<long long> r(x.v.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = x.v[k] + i * y.v[k];
  return canonical_class(std::move(r), x.mod);
}

PrimitiveClass hclass_dual(const PrimitiveClass& x, const PrimitiveClass& y) {
  if (x.mod != y.mod)
    throw Error(ErrorKind::length_mismatch, "classes live over different rings");
  long long i = intersection_form(x.v, y.v, x.mod);
  std::vector<long long> r(x.v.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = x.v[k] - i * y.v[k];
  return canonical_class(std::move(r), x.mod);
}

int HQuandle::index_of(const PrimitiveClass& c) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), c);
  if (it == classes.end() || !(*it == c)) return -1;
  return static_cast<int>(it - classes.begin());
}

HQuandle hquandle(int g, long long n, std::size_t bound) {
  if (g < 1 || n < 2)
    throw Error(ErrorKind::bad_input, "hquandle needs g >= 1 and n >= 2");
  const int dim = 2 * g;
  std::vector<PrimitiveClass> classes;
  std::vector<long long> v(dim, 0);
  // Enumerate Z_n^{2g} odometer-style, keep canonical primitive classes.
  for (;;) {
    if (is_primitive(v, n)) {
      PrimitiveClass c = canonical_class(v, n);
      if (c.v == v) {
        classes.push_back(c);
        if (classes.size() > bound)
          throw Error(ErrorKind::bound_exceeded, "too many primitive classes");
      }
    }
    int k = dim - 1;
    while (k >= 0 && v[k] == n - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  std::sort(classes.begin(), classes.end());
  HQuandle h;
  h.classes = std::move(classes);
  int size = static_cast<int>(h.classes.size());
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  std::vector<std::string> labels(size);
  for (int x = 0; x < size; ++x) labels[x] = format_class(h.classes[x]);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      int idx = h.index_of(hclass_op(h.classes[x], h.classes[y]));
      if (idx < 0)
        throw Error(ErrorKind::bad_input, "operation left the primitive classes");
      table[x][y] = idx;
    }
  h.quandle = make_quandle(std::move(table), std::move(labels));
  return h;
}

MatModN transvection(const PrimitiveClass& v, long long n) {
  if (n < 2) throw Error(ErrorKind::bad_input, "transvection needs a modulus >= 2");
  const int dim = static_cast<int>(v.v.size());
  // Column action: z -> z + i^(z, v) v, i.e. N = I - v v^T J with
  // J e_{2i-1} = -e_{2i}, J e_{2i} = e_{2i-1} blockwise.
  MatModN m = MatModN::identity(dim, n);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      int cp = c % 2 == 0 ? c + 1 : c - 1;       // column of J's nonzero in row c
      long long jsign = c % 2 == 0 ? -1 : 1;     // J entry (c, cp) sign pattern
      long long add = -v.v[r] * jsign * v.v[cp];
      m.at(r, c) = ((m.at(r, c) + add) % n + n) % n;
    }
  return m;
}

std::vector<long long> transvection_z(const PrimitiveClass& v) {
  const int dim = static_cast<int>(v.v.size());
  std::vector<long long> m(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + i] = 1;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      int cp = c % 2 == 0 ? c + 1 : c - 1;
      long long jsign = c % 2 == 0 ? -1 : 1;
      m[static_cast<std::size_t>(r) * dim + c] += -v.v[r] * jsign * v.v[cp];
    }
  return m;
}

namespace {

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::vector<PrimitiveClass> all_classes(int g, long long q) {
  const int dim = 2 * g;
  std::set<PrimitiveClass> out;
  std::vector<long long> v(dim, 0);
  for (;;) {
    if (is_primitive(v, q)) out.insert(canonical_class(v, q));
    int k = dim - 1;
    while (k >= 0 && v[k] == q - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return {out.begin(), out.end()};
}

PrimitiveClass basis_class(int g, long long q, int which) {
  std::vector<long long> e(2 * g, 0);
  e[which] = 1;
  return canonical_class(std::move(e), q);
}

}  // namespace

FiniteGroup sp_group(int g, long long q, std::size_t cap) {
  if (!is_prime(q))
    throw Error(ErrorKind::bad_input, "sp_group requires a prime modulus");
  std::vector<MatModN> gens;
  for (const auto& c : all_classes(g, q)) gens.push_back(transvection(c, q));
  return FiniteGroup::from_matrices(std::move(gens), cap);
}

DehnQuandle dehn_of_sp(int g, long long q, std::size_t cap) {
  FiniteGroup sp = sp_group(g, q, cap);
  int seed = sp.index_of(transvection(basis_class(g, q, 0), q));
  return dehn_quandle(std::move(sp), {seed});
}

LambdaReport lambda_check(int g, long long q, std::size_t cap) {
  LambdaReport out;
  HQuandle h = hquandle(g, q);
  FiniteGroup sp = sp_group(g, q, cap);
  int seed = sp.index_of(transvection(basis_class(g, q, 0), q));
  std::vector<int> cls = conjugacy_class(sp, seed);
  out.quandle_size = h.classes.size();
  out.class_size = cls.size();

  std::vector<int> lambda(h.classes.size());
  std::set<int> image;
  bool in_class = true;
  for (std::size_t i = 0; i < h.classes.size(); ++i) {
    lambda[i] = sp.index_of(transvection(h.classes[i], q));
    image.insert(lambda[i]);
    in_class = in_class && std::binary_search(cls.begin(), cls.end(), lambda[i]);
  }
  out.bijective = in_class && image.size() == h.classes.size() &&
                  image.size() == cls.size();

  out.homomorphism = true;
  for (std::size_t x = 0; x < h.classes.size() && out.homomorphism; ++x)
    for (std::size_t y = 0; y < h.classes.size(); ++y) {
      int lhs = lambda[h.quandle.table[x][y]];
      int rhs = sp.mul(sp.mul(lambda[y], lambda[x]), sp.inv(lambda[y]));
      if (lhs != rhs) {
        out.homomorphism = false;
        break;
      }
    }
  out.ok = out.bijective && out.homomorphism;
  return out;
}

PrimitiveClass mod_reduce(const PrimitiveClass& x, long long n) {
  if (x.mod != 0)
    throw Error(ErrorKind::bad_input, "mod_reduce expects an integral class");
  return canonical_class(x.v, n);
}

std::optional<std::vector<long long>> lift_primitive(const std::vector<long long>& r,
                                                     long long n) {
  // Representative entries in [0, n); add n to subsets of coordinates until
  // the integer gcd drops to 1. Small masks suffice for the tested sizes.
  std::vector<long long> base(r);
  for (auto& e : base) {
    e %= n;
    if (e < 0) e += n;
  }
  const int dim = static_cast<int>(base.size());
  for (int mult = 1; mult <= 3; ++mult)
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      std::vector<long long> v = base;
      for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) v[i] += mult * n;
      if (is_primitive(v, 0)) return v;
    }
  return std::nullopt;
}

ModReduceReport mod_reduce_check(int g, long long n, int box_radius) {
  ModReduceReport out;
  // Integral primitive classes with small entries.
  std::vector<PrimitiveClass> sample;
  const int dim = 2 * g;
  std::vector<long long> v(dim, -box_radius);
  for (;;) {
    if (is_primitive(v, 0)) {
      PrimitiveClass c = canonical_class(v, 0);
      if (std::find(sample.begin(), sample.end(), c) == sample.end())
        sample.push_back(c);
    }
    int k = dim - 1;
    while (k >= 0 && v[k] == box_radius) v[k--] = -box_radius;
    if (k < 0) break;
    ++v[k];
  }
  out.homomorphism = true;
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      PrimitiveClass lhs = mod_reduce(hclass_op(x, y), n);
      PrimitiveClass rhs = hclass_op(mod_reduce(x, n), mod_reduce(y, n));
      ++out.pairs_checked;
      if (!(lhs == rhs)) {
        out.homomorphism = false;
        break;
      }
    }
    if (!out.homomorphism) break;
  }
  out.surjective = true;
  for (const auto& c : all_classes(g, n)) {
    auto lift = lift_primitive(c.v, n);
    if (!lift || !(mod_reduce(canonical_class(*lift, 0), n) == c)) {
      out.surjective = false;
      break;
    }
    ++out.classes_lifted;
  }
  return out;
}

}  // namespace dehnkit
