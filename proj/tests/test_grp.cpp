#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <numeric>

#include "doctest.h"
#include "grp.hpp"

using namespace grp;

TEST_CASE("trivial and small closures") {
  auto F = ff::FiniteField::make(5, 1);
  Group t = generate(F, 2, 1, AutomorphismMap::identity(), {{mat_identity(2), 0}}, 10);
  CHECK(t.order() == 1);
}

TEST_CASE("SL2 orders and setup-1 relations") {
  for (std::int64_t q : {5, 7, 8, 9, 13}) {
    Group X = make_sl2(q);
    CHECK(X.order() == q * (q * q - 1));
    auto a = X.anchor("a");
    auto u = X.anchor("u");
    CHECK(X.element_order(a) == q - 1);
    CHECK(X.mul(X.inv(u), X.mul(a, u)) == X.inv(a));  // a^u = a^-1
    if (q % 2 == 1) {
      CHECK(X.mul(u, u) == X.pow(a, (q - 1) / 2));  // u^2 = a^((q-1)/2) = z
      CHECK(X.element_order(u) == 4);
    } else {
      CHECK(X.element_order(u) == 2);
    }
  }
}

TEST_CASE("Setup 1 torus normalizer is dicyclic of degree (q-1)/2") {
  Group X = make_sl2(13);
  auto gens = std::vector<GroupElement>{X.anchor("a"), X.anchor("u")};
  Group U = generate(X.field, 2, 1, AutomorphismMap::identity(), gens, 100);
  CHECK(U.order() == 2 * (13 - 1));  // 24, dicyclic of degree 6
}

TEST_CASE("conjugacy class counts") {
  // dicyclic of degree n has n+3 classes
  for (int n = 2; n <= 6; ++n) {
    Group G = make_dicyclic(n);
    CHECK(G.order() == 4 * n);
    auto C = conjugacy_classes(G);
    CHECK(C.count() == n + 3);
    // class equation
    std::int64_t sum = 0;
    for (auto s : C.size) sum += s;
    CHECK(sum == G.order());
    for (auto s : C.size) CHECK(G.order() % s == 0);
    // power map sanity
    for (int c = 0; c < C.count(); ++c) {
      CHECK(C.power_class(c, 1) == c);
      CHECK(C.power_class(c, -1) == C.inverse_class[c]);
    }
  }
  auto C5 = conjugacy_classes(make_sl2(5));
  CHECK(C5.count() == 9);
  // SL2(q) has q+4 classes for odd q, q+1 for even q
  CHECK(conjugacy_classes(make_sl2(9)).count() == 13);
  CHECK(conjugacy_classes(make_sl2(8)).count() == 9);
}

TEST_CASE("dicyclic center is {1, u^2}") {
  Group G = make_dicyclic(3);
  CHECK(G.order() == 12);
  Group Z = center(G);
  CHECK(Z.order() == 2);
  CHECK(Z.contains(G.mul(G.anchor("u"), G.anchor("u"))));
}

TEST_CASE("normalizers") {
  Group X = make_sl2(13);
  auto td = torus_normalizer(X, 3);
  CHECK(td.split);
  CHECK(td.T.order() == 12);
  CHECK(td.L.order() == 3);
  CHECK(td.U.order() == 24);
  CHECK(normalizer(X, X).order() == X.order());

  // non-split side: 3 | 11+1
  Group X11 = make_sl2(11);
  auto td11 = torus_normalizer(X11, 3);
  CHECK_FALSE(td11.split);
  CHECK(td11.T.order() == 12);
  CHECK(td11.U.order() == 24);

  Group X8 = make_sl2(8);
  auto td8 = torus_normalizer(X8, 7);
  CHECK(td8.split);
  CHECK(td8.T.order() == 7);
  CHECK(td8.U.order() == 14);
  // dihedral: u has order 2
  CHECK(X8.element_order(X8.anchor("u")) == 2);

  CHECK_THROWS_AS(torus_normalizer(X, 5), NoSuchPrime);  // 5 divides neither 12 nor 14
}

TEST_CASE("sylow subgroups") {
  Group X5 = make_sl2(5);
  CHECK(sylow(X5, 5).order() == 5);
  CHECK(sylow(X5, 2).order() == 8);
  CHECK_THROWS_AS(sylow(X5, 7), PrimeDoesNotDivide);

  Group X13 = make_sl2(13);
  Group P3 = sylow(X13, 3);
  CHECK(P3.order() == 3);
  // cyclic of order 3
  for (const auto& g : P3.elems)
    if (!(g == P3.identity())) CHECK(X13.element_order(g) == 3);
}

TEST_CASE("SL2 automorphisms") {
  Group X = make_sl2(9);
  auto maps = make_automorphisms(X);
  CHECK(is_automorphism(X, maps.alpha));
  REQUIRE(maps.tau.has_value());
  CHECK(is_automorphism(X, *maps.tau));

  // alpha fixes u, sends a to a^p
  auto a = X.anchor("a"), u = X.anchor("u");
  CHECK(maps.alpha.apply(X.F(), u) == u);
  CHECK(maps.alpha.apply(X.F(), a) == X.pow(a, 3));
  // tau fixes a
  CHECK(maps.tau->apply(X.F(), a) == a);

  Group X8 = make_sl2(8);
  auto maps8 = make_automorphisms(X8);
  CHECK_FALSE(maps8.tau.has_value());
  CHECK(is_automorphism(X8, maps8.alpha));
}

TEST_CASE("stabilize_on_subgroup") {
  Group X = make_sl2(13);
  auto td = torus_normalizer(X, 3);
  auto maps = make_automorphisms(X);
  // alpha is trivial for prime q; tau already fixes the split U
  auto tau_fixed = stabilize_on_subgroup(*maps.tau, td.U, X);
  for (auto gi : td.U.gens)
    CHECK(td.U.contains(tau_fixed.apply(X.F(), td.U.elems[gi])));

  // inner conjugation by an element outside N(U) gets corrected
  GroupElement g = X.anchor("c");
  auto inner = AutomorphismMap::conjugation_by(X.F(), g.m);
  auto fixed = stabilize_on_subgroup(inner, td.U, X);
  for (auto gi : td.U.gens)
    CHECK(td.U.contains(fixed.apply(X.F(), td.U.elems[gi])));

  // non-split torus normalizer: tau needs an inner correction
  Group X11 = make_sl2(11);
  auto td11 = torus_normalizer(X11, 3);
  auto maps11 = make_automorphisms(X11);
  auto tau11 = stabilize_on_subgroup(*maps11.tau, td11.U, X11);
  for (auto gi : td11.U.gens)
    CHECK(td11.U.contains(tau11.apply(X11.F(), td11.U.elems[gi])));
}

TEST_CASE("semidirect products") {
  Group X8 = make_sl2(8);
  auto maps = make_automorphisms(X8);
  Group S = semidirect_by_automorphism(X8, maps.alpha, 3);
  CHECK(S.order() == 1512);
  Group S1 = semidirect_by_automorphism(X8, AutomorphismMap::identity(), 1);
  CHECK(S1.order() == X8.order());
  CHECK_THROWS_AS(semidirect_by_automorphism(X8, maps.alpha, 2), OrderMismatch);

  // spot-check associativity on twisted elements
  auto g1 = S.elems[3], g2 = S.elems[100], g3 = S.elems[777];
  CHECK(S.mul(S.mul(g1, g2), g3) == S.mul(g1, S.mul(g2, g3)));
  for (const auto& g : {g1, g2, g3}) CHECK(S.mul(g, S.inv(g)) == S.identity());
}

TEST_CASE("Suzuki group Sz(8)") {
  Group X = make_sz(8);
  CHECK(X.order() == 29120);
  auto C = conjugacy_classes(X);
  CHECK(C.count() == 11);

  Group P = sylow(X, 2);
  CHECK(P.order() == 64);
  Group U = normalizer(X, P);
  CHECK(U.order() == 448);
  CHECK(X.order() / U.order() == 65);  // q^2 + 1

  // Hall subgroups <x>, <y>, <z> of orders 7, 13, 5 with normalizer
  // indices 2, 4, 4
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> expect = {
      {"x", {7, 14}}, {"y", {13, 52}}, {"z", {5, 20}}};
  for (auto& [name, oo] : expect) {
    auto g = X.anchor(name);
    CHECK(X.element_order(g) == oo.first);
    std::vector<GroupElement> cyc;
    GroupElement cur = X.identity();
    for (int i = 0; i < oo.first; ++i) {
      cyc.push_back(cur);
      cur = X.mul(cur, g);
    }
    Group H = subgroup_from_elements(X, cyc);
    Group NH = normalizer(X, H);
    CHECK(NH.order() == oo.second);
  }
}

TEST_CASE("subgroup element enumeration is key-sorted and deterministic") {
  Group X = make_sl2(7);
  Group Z = center(X);
  CHECK(Z.order() == 2);
  auto td = torus_normalizer(X, 3);
  for (std::size_t i = 1; i < td.U.elems.size(); ++i)
    CHECK(td.U.key(td.U.elems[i - 1]) < td.U.key(td.U.elems[i]));
}
