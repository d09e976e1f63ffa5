#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "dehnkit/quandles.hpp"

using namespace dehnkit;

TEST_CASE("axiom validation") {
  SUBCASE("dihedral table is valid") {
    CHECK_FALSE(check_axioms(dihedral_quandle(3).table).has_value());
  }
  SUBCASE("broken idempotence is reported with its witness") {
    auto t = trivial_quandle(2).table;
    t[0][0] = 1;
    auto v = check_axioms(t);
    REQUIRE(v.has_value());
    CHECK(v->axiom == AxiomViolation::Axiom::idempotence);
    CHECK(v->x == 0);
  }
  SUBCASE("constant columns break right bijectivity") {
    std::vector<std::vector<int>> t{{0, 0}, {0, 1}};
    auto v = check_axioms(t);
    REQUIRE(v.has_value());
    CHECK(v->axiom == AxiomViolation::Axiom::right_bijectivity);
  }
  SUBCASE("make_quandle throws on violations") {
    CHECK_THROWS_AS(make_quandle({{0, 0}, {0, 1}}), Error);
  }
}

TEST_CASE("dual operation") {
  auto r3 = dihedral_quandle(3);
  CHECK(r3.dual_op(0, 1) == 2);  // solve z*1 = 0
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(r3.dual_op(r3.op(x, y), y) == x);
  // involutory quandles have x *^{-1} y = x*y
  auto r5 = dihedral_quandle(5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(r5.dual_op(x, y) == r5.op(x, y));
}

TEST_CASE("components") {
  CHECK(components(dihedral_quandle(3)).size() == 1);
  CHECK(components(dihedral_quandle(4)).size() == 2);
  CHECK(components(trivial_quandle(4)).size() == 4);
}

TEST_CASE("inner group") {
  CHECK(inner_group(dihedral_quandle(3)).size() == 6);
  CHECK(inner_group(trivial_quandle(3)).size() == 1);
}

TEST_CASE("aut group") {
  CHECK(aut_group(trivial_quandle(3)).size() == 6);
  CHECK(aut_group(dihedral_quandle(3)).size() == 6);
  auto two_copies = disjoint_union(dihedral_quandle(3), dihedral_quandle(3));
  CHECK(aut_group(two_copies).size() == 72);
  CHECK_THROWS_AS(aut_group(trivial_quandle(65)), Error);
}

TEST_CASE("exponent") {
  CHECK(quandle_exponent(trivial_quandle(3)) == 1);
  CHECK(quandle_exponent(dihedral_quandle(5)) == 2);
  CHECK(quandle_exponent(dihedral_quandle(4)) == 2);
}

TEST_CASE("faithfulness") {
  CHECK(is_faithful(dihedral_quandle(3)));
  CHECK_FALSE(is_faithful(trivial_quandle(2)));
  // In R_4 = Core(Z_4) the translation S_y(x) = 2y - x only depends on 2y
  // mod 4, so S_0 = S_2.
  CHECK_FALSE(is_faithful(dihedral_quandle(4)));
  CHECK(is_faithful(dihedral_quandle(5)));
}

TEST_CASE("subquandle closure") {
  auto r3 = dihedral_quandle(3);
  CHECK(subquandle_generated(r3, {0, 1}) == std::vector<int>{0, 1, 2});
  auto r4 = dihedral_quandle(4);
  CHECK(subquandle_generated(r4, {0}) == std::vector<int>{0});
  std::vector<int> all(4);
  std::iota(all.begin(), all.end(), 0);
  CHECK(subquandle_generated(r4, all) == all);
}

TEST_CASE("isomorphism search") {
  SUBCASE("identity first on equal tables") {
    auto r3 = dihedral_quandle(3);
    auto iso = find_isomorphism(r3, r3);
    REQUIRE(iso.has_value());
    CHECK(*iso == std::vector<int>{0, 1, 2});
  }
  SUBCASE("component counts prune") {
    CHECK_FALSE(find_isomorphism(dihedral_quandle(3), trivial_quandle(3)).has_value());
  }
  SUBCASE("relabeled copies are found") {
    auto r4 = dihedral_quandle(4);
    // conjugate the table by the permutation sending x to p[x]
    std::vector<int> p{2, 3, 1, 0};
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) t[p[x]][p[y]] = p[r4.table[x][y]];
    auto iso = find_isomorphism(r4, make_quandle(std::move(t)));
    REQUIRE(iso.has_value());
  }
  SUBCASE("bound is enforced") {
    CHECK_THROWS_AS(find_isomorphism(trivial_quandle(300), trivial_quandle(300)),
                    Error);
  }
}

TEST_CASE("linear order search") {
  SUBCASE("trivial quandles carry any order on both sides") {
    for (int n = 2; n <= 5; ++n) {
      auto t = trivial_quandle(n);
      CHECK(search_linear_order(t, OrderSide::right).has_value());
      CHECK(search_linear_order(t, OrderSide::left).has_value());
      CHECK(search_linear_order(t, OrderSide::bi).has_value());
    }
  }
  SUBCASE("R_3 has no order on either side") {
    auto r3 = dihedral_quandle(3);
    CHECK_FALSE(search_linear_order(r3, OrderSide::right).has_value());
    CHECK_FALSE(search_linear_order(r3, OrderSide::left).has_value());
  }
  SUBCASE("bound is enforced") {
    CHECK_THROWS_AS(search_linear_order(trivial_quandle(11), OrderSide::right), Error);
  }
}

TEST_CASE("braid pairs") {
  auto r3 = dihedral_quandle(3);
  auto w = braid_pair_exists(r3);
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<int, int>{0, 1});
  CHECK_FALSE(braid_pair_exists(trivial_quandle(4)).has_value());
  CHECK_FALSE(braid_pair_exists(dihedral_quandle(4)).has_value());
}

TEST_CASE("order search refutes quandles with braid pairs") {
  for (const auto& q : {dihedral_quandle(3), dihedral_quandle(6)}) {
    if (!braid_pair_exists(q)) continue;
    CHECK_FALSE(search_linear_order(q, OrderSide::right).has_value());
    CHECK_FALSE(search_linear_order(q, OrderSide::left).has_value());
  }
}

TEST_CASE("product and disjoint union") {
  auto r3 = dihedral_quandle(3);
  auto p = product(r3, r3);
  CHECK(p.n == 9);
  CHECK_FALSE(check_axioms(p.table).has_value());
  auto u = disjoint_union(trivial_quandle(1), trivial_quandle(1));
  CHECK(u.table == trivial_quandle(2).table);
  CHECK(components(disjoint_union(r3, dihedral_quandle(4))).size() == 3);
  CHECK(components(disjoint_union(r3, r3)).size() ==
        components(r3).size() + components(r3).size());
}

TEST_CASE("json round trip") {
  auto r4 = dihedral_quandle(4);
  auto back = quandle_from_json_text(quandle_to_json_text(r4));
  CHECK(back.table == r4.table);
  CHECK_THROWS_AS(quandle_from_json_text("{\"size\":2,\"table\":[[0,0],[0,1]]}"), Error);
  CHECK(quandle_to_csv(r4).substr(0, 2) == "*,");
}
