#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "dehnkit/constructions.hpp"

using namespace dehnkit;

namespace {

std::vector<int> negation_automorphism(const FiniteGroup& g) {
  std::vector<int> phi(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) phi[x] = g.inv(static_cast<int>(x));
  return phi;
}

std::vector<int> doubling_automorphism(const FiniteGroup& g) {
  std::vector<int> phi(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    phi[x] = g.mul(static_cast<int>(x), static_cast<int>(x));
  return phi;
}

}  // namespace

TEST_CASE("conjugation quandles") {
  SUBCASE("abelian groups give trivial quandles") {
    auto q = conj_quandle(cyclic_group(4));
    CHECK(q.table == trivial_quandle(4).table);
  }
  SUBCASE("transposition class of S_3 is R_3") {
    auto s3 = symmetric_group(3);
    auto q = conj_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3))});
    CHECK(q.n == 3);
    CHECK(find_isomorphism(q, dihedral_quandle(3)).has_value());
  }
  SUBCASE("full Conj(S_3) has three components") {
    auto q = conj_quandle(symmetric_group(3));
    CHECK(q.n == 6);
    CHECK(components(q).size() == 3);
  }
  SUBCASE("restricted to the 3-cycle class the action is trivial") {
    auto s3 = symmetric_group(3);
    auto q = conj_quandle(s3, {s3.index_of(parse_cycles("(0 1 2)", 3))});
    CHECK(q.n == 2);
    CHECK(quandle_exponent(q) == 1);
    // Inside the full conjugation quandle a 3-cycle acts with order 3 (it
    // cycles the transpositions), so the ambient exponent is lcm(2,3).
    CHECK(quandle_exponent(conj_quandle(s3)) == 6);
  }
}

TEST_CASE("core quandles") {
  SUBCASE("Core(Z_3) is R_3") {
    CHECK(core_quandle(cyclic_group(3)).table == dihedral_quandle(3).table);
  }
  SUBCASE("Core of the trivial group") {
    CHECK(core_quandle(cyclic_group(1)).n == 1);
  }
  SUBCASE("Core(Z_4) is R_4 with two components") {
    auto q = core_quandle(cyclic_group(4));
    CHECK(find_isomorphism(q, dihedral_quandle(4)).has_value());
    CHECK(components(q).size() == 2);
  }
  SUBCASE("core quandles are involutory") {
    for (auto g : {cyclic_group(5), symmetric_group(3), dihedral_group(4)})
      CHECK(quandle_exponent(core_quandle(g)) <= 2);
  }
}

TEST_CASE("alexander quandles") {
  SUBCASE("negation on Z_3 gives R_3") {
    auto z3 = cyclic_group(3);
    CHECK(alexander_quandle(z3, negation_automorphism(z3)).table ==
          dihedral_quandle(3).table);
  }
  SUBCASE("identity automorphism gives the trivial quandle") {
    auto z4 = cyclic_group(4);
    std::vector<int> id(z4.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(alexander_quandle(z4, id).table == trivial_quandle(4).table);
  }
  SUBCASE("doubling on Z_5 is connected and faithful") {
    auto z5 = cyclic_group(5);
    auto dbl = doubling_automorphism(z5);
    auto q = alexander_quandle(z5, dbl);
    CHECK(q.n == 5);
    CHECK(components(q).size() == 1);
    CHECK(is_faithful(q));
    int fixed = 0;
    for (std::size_t x = 0; x < z5.size(); ++x)
      if (dbl[x] == static_cast<int>(x)) ++fixed;
    CHECK(fixed == 1);  // fixed-point free away from the identity
  }
  SUBCASE("non-automorphisms are rejected") {
    CHECK_THROWS_AS(alexander_quandle(cyclic_group(4), {1, 0, 2, 3}), Error);
  }
}

TEST_CASE("dehn quandles") {
  SUBCASE("transposition seed in S_3") {
    auto s3 = symmetric_group(3);
    auto d = dehn_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3))});
    CHECK(d.quandle.n == 3);
    CHECK(find_isomorphism(d.quandle, dihedral_quandle(3)).has_value());
    // x*y tracks conjugation y x y^{-1} through element_to_group
    for (int x = 0; x < d.quandle.n; ++x)
      for (int y = 0; y < d.quandle.n; ++y) {
        int gx = d.element_to_group[x], gy = d.element_to_group[y];
        int conj = d.group.mul(d.group.mul(gy, gx), d.group.inv(gy));
        CHECK(d.element_to_group[d.quandle.table[x][y]] == conj);
      }
  }
  SUBCASE("trivial group, identity seed") {
    CHECK(dehn_quandle(cyclic_group(1), {0}).quandle.n == 1);
  }
  SUBCASE("unipotent seed in SL(2,3)") {
    auto g = sl2(3);
    MatModN u = MatModN::identity(2, 3);
    u.at(0, 1) = 1;
    auto d = dehn_quandle(g, {g.index_of(u)});
    CHECK(d.quandle.n == 4);
    CHECK(components(d.quandle).size() == 1);
  }
  SUBCASE("components biject with seed classes") {
    auto s4 = symmetric_group(4);
    auto d = dehn_quandle(s4, {s4.index_of(parse_cycles("(0 1)", 4)),
                               s4.index_of(parse_cycles("(0 1 2 3)", 4))});
    auto counts = class_counts(d);
    CHECK(counts.c == 2);
    CHECK(counts.ct == 2);
    CHECK(components(d.quandle).size() == 2);
  }
  SUBCASE("conjugate seeds collapse to one class") {
    auto s3 = symmetric_group(3);
    auto d = dehn_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3)),
                               s3.index_of(parse_cycles("(1 2)", 3))});
    CHECK(class_counts(d).c == 1);
  }
  SUBCASE("Coxeter-style seeds give involutory Dehn quandles") {
    for (int n : {3, 4}) {
      auto sn = symmetric_group(n);
      std::vector<int> seeds;
      for (int i = 0; i + 1 < n; ++i)
        seeds.push_back(sn.index_of(parse_cycles(
            "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n)));
      auto d = dehn_quandle(sn, seeds);
      CHECK(quandle_exponent(d.quandle) <= 2);
    }
  }
}

TEST_CASE("env abelianization") {
  SUBCASE("R_3 is connected of rank one") {
    auto env = env_abelianization(dihedral_quandle(3));
    CHECK(env.free_rank == 1);
    CHECK(env.torsion_free());
  }
  SUBCASE("trivial quandles are free of full rank") {
    auto env = env_abelianization(trivial_quandle(4));
    CHECK(env.free_rank == 4);
    CHECK(env.torsion_free());
  }
  SUBCASE("Conj(S_3) has rank three") {
    auto env = env_abelianization(conj_quandle(symmetric_group(3)));
    CHECK(env.free_rank == 3);
    CHECK(env.torsion_free());
  }
  SUBCASE("free rank equals the component count") {
    for (const auto& q :
         {dihedral_quandle(4), dihedral_quandle(6), conj_quandle(symmetric_group(4))}) {
      auto env = env_abelianization(q);
      CHECK(env.free_rank == static_cast<int>(components(q).size()));
    }
  }
}

TEST_CASE("dehn witness") {
  SUBCASE("R_3 embeds in its inner group") {
    auto w = dehn_witness(dihedral_quandle(3));
    REQUIRE(w.determined);
    CHECK(w.witness->group.size() == 6);
    CHECK(w.witness->quandle.n == 3);
  }
  SUBCASE("non-faithful input stays undetermined") {
    CHECK_FALSE(dehn_witness(trivial_quandle(2)).determined);
    // Core(Z_4) is not faithful (S_0 = S_2), so the embedding witness cannot
    // decide it even though core quandles are always Dehn quandles.
    CHECK_FALSE(dehn_witness(core_quandle(cyclic_group(4))).determined);
  }
  SUBCASE("faithful core quandles are witnessed") {
    for (auto g : {cyclic_group(3), cyclic_group(5), symmetric_group(3)}) {
      auto q = core_quandle(g);
      REQUIRE(is_faithful(q));
      CHECK(dehn_witness(q).determined);
    }
  }
}

TEST_CASE("inner group vs central quotient") {
  SUBCASE("transpositions of S_3") {
    auto s3 = symmetric_group(3);
    auto d = dehn_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3))});
    auto rep = inn_equals_central_quotient(d);
    CHECK(rep.ok);
    CHECK(rep.inn_order == 6);
  }
  SUBCASE("abelian groups give trivial inner groups") {
    auto z6 = cyclic_group(6);
    auto d = dehn_quandle(z6, {z6.generator_indices().front()});
    auto rep = inn_equals_central_quotient(d);
    CHECK(rep.ok);
    CHECK(rep.inn_order == 1);
    CHECK(rep.quotient_order == 1);
  }
  SUBCASE("unipotent class of SL(2,3)") {
    auto g = sl2(3);
    MatModN u = MatModN::identity(2, 3);
    u.at(0, 1) = 1;
    auto d = dehn_quandle(g, {g.index_of(u)});
    auto rep = inn_equals_central_quotient(d);
    CHECK(rep.ok);
    CHECK(rep.inn_order == 12);
    CHECK(rep.quotient_order == 12);
  }
  SUBCASE("non-generating seeds are rejected") {
    auto s3 = symmetric_group(3);
    auto d = dehn_quandle(s3, {s3.index_of(parse_cycles("(0 1 2)", 3))});
    CHECK_THROWS_AS(inn_equals_central_quotient(d), Error);
  }
}

TEST_CASE("alexander bi-order check") {
  SUBCASE("the Fibonacci automorphism is bi-order compatible") {
    auto v = alexander_biorder_check({2, 1, 1, 1});
    CHECK(v.ok);
    CHECK(v.positives_checked > 0);
    CHECK(v.triples_checked > 0);
  }
  SUBCASE("identity fails: phi(g) is not strictly below g") {
    CHECK_FALSE(alexander_biorder_check({1, 0, 0, 1}).ok);
  }
  SUBCASE("negation fails: phi(g) is not positive") {
    CHECK_FALSE(alexander_biorder_check({-1, 0, 0, -1}).ok);
  }
  SUBCASE("determinant is checked") {
    CHECK_THROWS_AS(alexander_biorder_check({2, 0, 0, 2}), Error);
  }
}

TEST_CASE("every constructor output validates") {
  auto s3 = symmetric_group(3);
  auto z5 = cyclic_group(5);
  std::vector<FiniteQuandle> built;
  built.push_back(conj_quandle(s3));
  built.push_back(conj_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3))}));
  built.push_back(core_quandle(dihedral_group(4)));
  built.push_back(alexander_quandle(z5, doubling_automorphism(z5)));
  built.push_back(dehn_quandle(s3, {s3.index_of(parse_cycles("(0 1)", 3))}).quandle);
  for (const auto& q : built) CHECK_FALSE(check_axioms(q.table).has_value());
}
