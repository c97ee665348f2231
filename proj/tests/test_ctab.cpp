#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "ctab.hpp"
#include "doctest.h"
#include "specs.hpp"

using namespace ctab;
using cyc::Cyc;
using cyc::Rat;

static void check_orthogonality(const CharacterTable& T) {
  const auto& C = T.gd->C;
  int k = T.count();
  // rows
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      Rat ip = inner_product(T.row(i), T.row(j));
      CHECK(ip == Rat(i == j ? 1 : 0));
    }
  }
  // columns: sum_chi chi(g) conj(chi(h)) = delta * |C_G(g)|
  for (int a = 0; a < C.count(); ++a) {
    for (int b = a; b < C.count(); ++b) {
      Cyc s;
      for (int i = 0; i < k; ++i) s = s + T.rows[i][a] * T.rows[i][b].conj();
      if (a == b) {
        CHECK(s == Cyc(Rat((long)(T.gd->G.order() / C.size[a]))));
      } else {
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("trivial group has the single character [1]") {
  auto F = ff::FiniteField::make(5, 1);
  auto gd = GroupData::make(grp::generate(F, 2, 1, grp::AutomorphismMap::identity(),
                                          {{grp::mat_identity(2), 0}}, 2));
  auto T = character_table(gd);
  REQUIRE(T.count() == 1);
  CHECK(T.rows[0][0] == Cyc(1));
}

TEST_CASE("dicyclic degree 3: four linear characters and degrees 1,1,1,1,2,2") {
  const auto& T = specs::table("dic:3");
  std::vector<std::int64_t> want = {1, 1, 1, 1, 2, 2};
  CHECK(T.degrees == want);
  check_orthogonality(T);
}

TEST_CASE("SL2(5) degrees") {
  const auto& T = specs::table("sl2:5");
  std::vector<std::int64_t> want = {1, 2, 2, 3, 3, 4, 4, 5, 6};
  CHECK(T.degrees == want);
  check_orthogonality(T);
  // all values are algebraic integers: integral coefficients
  for (const auto& row : T.rows)
    for (const auto& v : row)
      for (const auto& c : v.coeffs()) CHECK(c.get_den() == 1);
}

TEST_CASE("degrees divide the group order") {
  for (const char* spec : {"sl2:7", "sl2:8", "dic:5", "dih:9"}) {
    const auto& T = specs::table(spec);
    for (auto d : T.degrees) CHECK(T.gd->G.order() % d == 0);
  }
}

TEST_CASE("dicyclic closed forms match computed tables") {
  for (int n = 2; n <= 6; ++n) {
    CharacterTable F = dicyclic_table_formulas(n);
    CharacterTable T = character_table(F.gd);
    REQUIRE(F.count() == T.count());
    for (int i = 0; i < F.count(); ++i) {
      CHECK(F.degrees[i] == T.degrees[i]);
      for (size_t j = 0; j < F.rows[i].size(); ++j) CHECK(F.rows[i][j] == T.rows[i][j]);
    }
  }
}

TEST_CASE("mu+(u) = i for odd degree") {
  CharacterTable T = dicyclic_table_formulas(3);
  auto L = label_characters(T, Family::Dicyclic);
  int cu = T.gd->C.class_of[T.gd->G.index_of(T.gd->G.anchor("u"))];
  CHECK(T.rows[L.at("mu+")][cu] == Cyc::root_of_unity(4, 1));
  CHECK(T.rows[L.at("mu-")][cu] == Cyc::root_of_unity(4, 3));
  // n = 4: Sgn is the unique linear character taking -1 exactly twice
  CharacterTable T4 = dicyclic_table_formulas(4);
  auto L4 = label_characters(T4, Family::Dicyclic);
  int sgn = L4.at("Sgn");
  int count_minus1 = 0;
  for (size_t j = 0; j < T4.rows[sgn].size(); ++j)
    if (T4.rows[sgn][j] == Cyc(-1)) ++count_minus1;
  CHECK(count_minus1 == 2);
  for (int r : {L4.at("1"), L4.at("mu+"), L4.at("mu-")}) {
    int cnt = 0;
    for (size_t j = 0; j < T4.rows[r].size(); ++j)
      if (T4.rows[r][j] == Cyc(-1)) ++cnt;
    CHECK(cnt != 2);
  }
  // mu_1(x) = zeta_2n + zeta_2n^-1
  int cx = T.gd->C.class_of[T.gd->G.index_of(T.gd->G.anchor("x"))];
  CHECK(T.rows[L.at("mu_1")][cx] ==
        Cyc::root_of_unity(6, 1) + Cyc::root_of_unity(6, -1));
}

TEST_CASE("restriction and induction") {
  auto X = specs::group("sl2:7");
  const auto& TX = specs::table("sl2:7");
  auto td = grp::torus_normalizer(X->G, 3);
  auto U = GroupData::make(td.U);
  auto TU = character_table(U);

  // restrict(1_X) = 1_U
  ClassFunction one = TX.row(0);
  for (const auto& v : one.values) REQUIRE(v == Cyc(1));
  ClassFunction oneU = restrict_to(one, U);
  for (const auto& v : oneU.values) CHECK(v == Cyc(1));

  // induce from U = X is the identity
  ClassFunction chi = TX.row(3);
  auto Xcopy = X;
  ClassFunction same = induce_from(chi, Xcopy);
  for (size_t j = 0; j < chi.values.size(); ++j) CHECK(same.values[j] == chi.values[j]);

  // Frobenius reciprocity on all pairs
  for (int i = 0; i < TX.count(); ++i) {
    for (int j = 0; j < TU.count(); ++j) {
      Rat lhs = inner_product(induce_from(TU.row(j), X), TX.row(i));
      Rat rhs = inner_product(TU.row(j), restrict_to(TX.row(i), U));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("character predicates") {
  const auto& T5 = specs::table("sl2:5");
  auto L5 = label_characters(T5, Family::Sl2Odd);
  // Steinberg is rational
  auto psi = character_predicates(T5.row(L5.at("Psi")));
  CHECK(psi.is_rational);
  CHECK(psi.degree == 5);
  // eta characters have field of values Q(sqrt 5): real, irrational
  for (const char* name : {"eta1", "eta2"}) {
    auto p = character_predicates(T5.row(L5.at(name)));
    CHECK(p.is_real);
    CHECK_FALSE(p.is_rational);
    CHECK(cyc::conductor_of_values(T5.rows[L5.at(name)]) == 5);
  }
  // kernel of the trivial character is everything
  auto triv = character_predicates(T5.row(L5.at("1")));
  CHECK((int)triv.kernel_classes.size() == T5.gd->C.count());
}

TEST_CASE("l_prime_subset counts") {
  CHECK(l_prime_subset(specs::table("sl2:13"), 3).size() == 9);
  CHECK(l_prime_subset(specs::table("sl2:11"), 3).size() == 9);
  // l coprime to |G|: every row
  CHECK((int)l_prime_subset(specs::table("sl2:5"), 7).size() ==
        specs::table("sl2:5").count());
}

TEST_CASE("labeling SL2(13) and SL2(8)") {
  const auto& T13 = specs::table("sl2:13");
  auto L13 = label_characters(T13, Family::Sl2Odd);
  CHECK(T13.degrees[L13.at("Psi")] == 13);
  for (int i = 1; i <= 5; ++i) CHECK(T13.degrees[L13.at("chi_" + std::to_string(i))] == 14);
  for (int j = 1; j <= 6; ++j)
    CHECK(T13.degrees[L13.at("theta_" + std::to_string(j))] == 12);
  CHECK(T13.degrees[L13.at("xi1")] == 7);
  CHECK(T13.degrees[L13.at("eta1")] == 6);

  const auto& T8 = specs::table("sl2:8");
  auto L8 = label_characters(T8, Family::Sl2Even);
  // no degree-2 rows; (q-2)/2 rows of degree q+1 and q/2 of degree q-1
  for (auto d : T8.degrees) CHECK(d != 2);
  int nine = 0, seven = 0;
  for (auto d : T8.degrees) {
    if (d == 9) ++nine;
    if (d == 7) ++seven;
  }
  CHECK(nine == 3);
  CHECK(seven == 4);
  for (int i = 1; i <= 3; ++i) CHECK(L8.has("chi_" + std::to_string(i)));
  for (int j = 1; j <= 4; ++j) CHECK(L8.has("theta_" + std::to_string(j)));
}

TEST_CASE("extensions in SL2(8) x C3") {
  auto X = specs::group("sl2:8");
  const auto& TX = specs::table("sl2:8");
  const auto& TS = specs::table("sl2:8:aut");
  auto LX = label_characters(TX, Family::Sl2Even);

  // 1_X has 3 linear extensions
  auto ext1 = extensions(TS, X, TX.row(LX.at("1")));
  CHECK(ext1.size() == 3);
  for (int r : ext1) CHECK(TS.degrees[r] == 1);

  // the Steinberg character has 3 extensions, at least one rational
  auto extPsi = extensions(TS, X, TX.row(LX.at("Psi")));
  CHECK(extPsi.size() == 3);
  bool some_rational = false;
  for (int r : extPsi)
    if (character_predicates(TS.row(r)).is_rational) some_rational = true;
  CHECK(some_rational);

  // a non-invariant character has no extension (alpha moves chi_1)
  auto ext_chi = extensions(TS, X, TX.row(LX.at("chi_1")));
  CHECK(ext_chi.empty());
}
