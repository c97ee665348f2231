#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ff.hpp"

using ff::FiniteField;

TEST_CASE("field construction picks the smallest irreducible modulus") {
  auto F5 = FiniteField::make(5, 1);
  CHECK(F5->q() == 5);
  CHECK(F5->modulus() == std::vector<std::int32_t>{0, 1});  // x

  // oracle: enumerate all monic cubics over GF(2) and test reducibility by
  // checking for roots / quadratic factors by brute force multiplication
  auto F8 = FiniteField::make(2, 3);
  CHECK(F8->q() == 8);
  // x^3 + x + 1 encodes as coefficients (1,1,0,1)
  CHECK(F8->modulus() == std::vector<std::int32_t>{1, 1, 0, 1});

  auto F9 = FiniteField::make(3, 2);
  CHECK(F9->q() == 9);

  CHECK_THROWS_AS(FiniteField::make(6, 1), ff::NonPrime);
  CHECK_THROWS_AS(FiniteField::make(2, 40), ff::TooLarge);
}

TEST_CASE("prime field arithmetic") {
  auto F = FiniteField::make(5, 1);
  CHECK(F->add(3, 4) == 2);
  CHECK(F->div(2, 3) == 4);  // 3*4 = 12 = 2 mod 5
  CHECK_THROWS_AS(F->div(1, 0), ff::DivisionByZero);
}

TEST_CASE("extension arithmetic reduces modulo x^3+x+1") {
  auto F = FiniteField::make(2, 3);
  std::int32_t x = F->from_coeffs({0, 1, 0});
  std::int32_t x2 = F->from_coeffs({0, 0, 1});
  // x * x^2 = x^3 = x + 1
  CHECK(F->mul(x, x2) == F->from_coeffs({1, 1, 0}));
}

TEST_CASE("frobenius") {
  auto F9 = FiniteField::make(3, 2);
  std::int32_t g = F9->generator();
  CHECK(F9->frobenius(g, 0) == g);
  CHECK(F9->frobenius(g, 1) == F9->pow(g, 3));
  for (std::int32_t a = 0; a < F9->q(); ++a)
    CHECK(F9->frobenius(a, F9->n()) == a);  // x^q = x

  // field homomorphism on all pairs
  for (std::int32_t a = 0; a < F9->q(); ++a) {
    for (std::int32_t b = 0; b < F9->q(); ++b) {
      CHECK(F9->frobenius(F9->mul(a, b), 1) ==
            F9->mul(F9->frobenius(a, 1), F9->frobenius(b, 1)));
      CHECK(F9->frobenius(F9->add(a, b), 1) ==
            F9->add(F9->frobenius(a, 1), F9->frobenius(b, 1)));
    }
  }
}

TEST_CASE("multiplicative generator is the first of full order") {
  CHECK(FiniteField::make(5, 1)->generator() == 2);
  CHECK(FiniteField::make(7, 1)->generator() == 3);
  auto F4 = FiniteField::make(2, 2);
  CHECK(F4->generator() == 2);  // first non-identity, non-zero element
  CHECK(F4->element_order(F4->generator()) == 3);

  for (auto [p, n] : {std::pair<int, int>{2, 4}, {3, 2}, {5, 2}, {31, 1}}) {
    auto F = FiniteField::make(p, n);
    std::int32_t g = F->generator();
    CHECK(F->element_order(g) == F->q() - 1);
    for (std::int64_t r : ff::prime_factors(F->q() - 1))
      CHECK(F->pow(g, (F->q() - 1) / r) != 1);
  }
}

TEST_CASE("ring axioms on exhaustive triples for q <= 9") {
  for (auto [p, n] : {std::pair<int, int>{2, 3}, {3, 2}, {7, 1}}) {
    auto F = FiniteField::make(p, n);
    for (std::int32_t a = 0; a < F->q(); ++a) {
      for (std::int32_t b = 0; b < F->q(); ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (std::int32_t c = 0; c < F->q(); ++c) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("element round trip and inverses") {
  auto F = FiniteField::make(2, 4);
  for (std::int32_t a = 0; a < F->q(); ++a) {
    CHECK(F->from_coeffs(F->coeffs(a)) == a);
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}
