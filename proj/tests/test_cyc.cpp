#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "cyc.hpp"
#include "doctest.h"
#include "ff.hpp"
#include "numeric.hpp"

using cyc::Cyc;
using cyc::Rat;

static Cyc zeta(std::int64_t n, std::int64_t e) { return Cyc::root_of_unity(n, e); }

TEST_CASE("basic arithmetic identities") {
  CHECK(zeta(4, 1) * zeta(4, 1) == Cyc(-1));
  CHECK(zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4) == Cyc(-1));
  CHECK((Cyc(1) + zeta(3, 1)) * (Cyc(1) + zeta(3, 2)) == Cyc(1));
  CHECK(zeta(6, 3) == Cyc(-1));
  CHECK(zeta(5, 7) == zeta(5, 2));
  // cross-modulus lift
  CHECK(zeta(6, 1) * zeta(6, 1) == zeta(3, 1));
  CHECK((zeta(8, 1) * zeta(12, 1)).modulus() == 24);
}

TEST_CASE("rational detection and comparison") {
  Cyc z = zeta(5, 1) + zeta(5, 4) + zeta(5, 2) + zeta(5, 3);
  CHECK(z.is_rational());
  CHECK(z.rational_value() == -1);
  CHECK(z.reduced().modulus() == 1);
  CHECK(Cyc::cmp(Cyc(2), zeta(3, 1)) != 0);
  CHECK(Cyc::cmp(z, Cyc(-1)) == 0);
}

TEST_CASE("galois composition law on random values") {
  // sigma_k . sigma_m = sigma_{km mod N} for all units, N <= 40
  for (std::int64_t N : {5, 8, 12, 21, 40}) {
    Cyc z = zeta(N, 1) + Rat(3) * zeta(N, N > 2 ? 2 : 0) - Cyc(Rat(1, 2));
    for (std::int64_t k = 1; k < N; ++k) {
      if (cyc::gcd64(k, N) != 1) continue;
      for (std::int64_t m = 1; m < N; ++m) {
        if (cyc::gcd64(m, N) != 1) continue;
        Cyc lhs = cyc::galois_apply({N, k}, cyc::galois_apply({N, m}, z));
        Cyc rhs = cyc::galois_apply({N, (k * m) % N}, z);
        CHECK(lhs == rhs);
      }
    }
  }
  // identity and conjugation
  Cyc z = zeta(7, 1) - zeta(7, 3);
  CHECK(cyc::galois_apply({7, 1}, z) == z);
  CHECK(z.conj() == zeta(7, 6) - zeta(7, 4));
}

TEST_CASE("gauss sums square to (-1)^((p-1)/2) p") {
  for (std::int64_t p = 3; p < 50; ++p) {
    if (!ff::is_prime(p)) continue;
    Cyc g = cyc::gauss_sum(p);
    Cyc expect = Cyc(Rat((p % 4 == 1) ? p : -p));
    CHECK(g * g == expect);
  }
  // explicit small case: p = 3 gives zeta3 - zeta3^2
  CHECK(cyc::gauss_sum(3) == zeta(3, 1) - zeta(3, 2));
}

TEST_CASE("gauss sum multiplier identity") {
  // sum_k (k/p) zeta_p^{nk} = (n/p) * gauss_sum(p), p < 20, p does not divide n
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19}) {
    Cyc g = cyc::gauss_sum(p);
    for (std::int64_t n = 1; n < 2 * p; ++n) {
      if (n % p == 0) continue;
      std::vector<Rat> coef(p, Rat(0));
      for (std::int64_t k = 1; k < p; ++k)
        coef[(n * k) % p] += cyc::legendre(k, p);
      Cyc lhs = Cyc::from_powers(p, coef);
      CHECK(lhs == Rat(cyc::legendre(n, p)) * g);
    }
  }
}

TEST_CASE("sigma_2 sends sqrt(5) to -sqrt(5)") {
  Cyc sqrt5 = cyc::gauss_sum(5);
  CHECK(cyc::galois_apply({5, 2}, sqrt5) == -sqrt5);
}

TEST_CASE("quadratic reciprocity for odd primes below 50") {
  for (std::int64_t p = 3; p < 50; ++p) {
    if (!ff::is_prime(p)) continue;
    for (std::int64_t q = 3; q < 50; ++q) {
      if (q == p || !ff::is_prime(q)) continue;
      int lhs = cyc::legendre(q, p) * cyc::legendre(p, q);
      int rhs = (((p - 1) / 2) * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
      CHECK(lhs == rhs);
    }
  }
  CHECK(cyc::legendre(1, 5) == 1);
  CHECK(cyc::legendre(2, 5) == -1);
  CHECK(cyc::legendre(0, 7) == 0);
}

TEST_CASE("conductors") {
  CHECK(cyc::conductor_of_values({Cyc(1), Cyc(Rat(-3, 2))}) == 1);
  CHECK(cyc::conductor_of_values({zeta(5, 1) + zeta(5, 4)}) == 5);
  CHECK(cyc::conductor_of_values({zeta(4, 1)}) == 4);
  CHECK(cyc::conductor_of_value(cyc::gauss_sum(5)) == 5);
  CHECK(cyc::conductor_of_value(cyc::gauss_sum(7)) == 7);
  // Q(i*sqrt(5)) has discriminant -20
  CHECK(cyc::conductor_of_value(zeta(4, 1) * cyc::gauss_sum(5)) == 20);

  // zeta_N has conductor N unless N = 2 mod 4
  for (std::int64_t N : {3, 4, 5, 7, 8, 9, 12, 15, 16}) {
    CHECK(cyc::conductor_of_value(zeta(N, 1)) == N);
  }
  CHECK(cyc::conductor_of_value(zeta(6, 1)) == 3);  // Q(zeta_6) = Q(zeta_3)

  // monotone under adding values
  std::vector<Cyc> vals = {zeta(3, 1)};
  std::int64_t c1 = cyc::conductor_of_values(vals);
  vals.push_back(zeta(8, 1));
  std::int64_t c2 = cyc::conductor_of_values(vals);
  CHECK(c2 % c1 == 0);
  CHECK(c2 == 24);
}

TEST_CASE("per-value lcm strategy matches the direct computation up to N = 60") {
  for (std::int64_t N = 1; N <= 60; ++N) {
    std::vector<Cyc> vals = {zeta(N, 1) + zeta(N, N - 1), zeta(N, 1) * Cyc(2),
                             cyc::gauss_sum(5)};
    CHECK(cyc::conductor_of_values(vals) == cyc::conductor_of_values_direct(vals));
  }
}

TEST_CASE("H subgroups") {
  auto H = cyc::h_subgroup(5, 12);
  CHECK(H.members == std::vector<std::int64_t>{1, 5});
  auto H2 = cyc::h_subgroup(7, 21);
  CHECK(H2.members == std::vector<std::int64_t>{1, 4, 10, 13, 16, 19});
  auto H3 = cyc::h_subgroup(3, 8);
  CHECK(H3.members == std::vector<std::int64_t>{1, 3});
  // closure under multiplication and 1 membership
  for (auto& Hx : {H, H2, H3}) {
    CHECK(std::find(Hx.members.begin(), Hx.members.end(), 1) != Hx.members.end());
    for (auto a : Hx.members)
      for (auto b : Hx.members) {
        std::int64_t c = (a * b) % Hx.N;
        CHECK(std::find(Hx.members.begin(), Hx.members.end(), c) != Hx.members.end());
      }
  }
  CHECK(cyc::full_galois_group(8).members == std::vector<std::int64_t>{1, 3, 5, 7});
}

TEST_CASE("H-subgroup number theory from the bijection proofs") {
  // (p/l) = 1 for primes l dividing p^odd - 1
  // 4 | (l-1) for odd l dividing p^even + 1
  // for q = p^(s*m), s = 2^k >= 2: l | q+1 has (l/p) = 1 iff l = 1 mod 4s
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (int n = 1; n <= 20; ++n) {
      std::int64_t q = 1;
      bool overflow = false;
      for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (1 << 20)) {
          overflow = true;
          break;
        }
      }
      if (overflow) break;
      if (n % 2 == 1) {
        for (std::int64_t l : ff::prime_factors(q - 1))
          if (l > 2 && l != p) CHECK(cyc::legendre(p, l) == 1);
      } else {
        for (std::int64_t l : ff::prime_factors(q + 1))
          if (l > 2) CHECK((l - 1) % 4 == 0);
      }
      int s = 1, m = n;
      while (m % 2 == 0) {
        m /= 2;
        s *= 2;
      }
      if (s >= 2) {
        for (std::int64_t l : ff::prime_factors(q + 1)) {
          if (l <= 2) continue;
          bool sq = cyc::legendre(l, p) == 1;
          CHECK(sq == (l % (4 * s) == 1));
        }
      }
    }
  }
}

TEST_CASE("numeric embedding convention and certified signs") {
  auto box = numeric::embed(Cyc(-1), 30);
  CHECK(box.re_hi < -0.999);
  CHECK(box.im_lo < 1e-25);
  CHECK(box.im_hi > -1e-25);

  auto i_box = numeric::embed(zeta(4, 1), 30);
  CHECK(i_box.im_lo > 0.999);
  CHECK(i_box.re_lo < 1e-25);
  CHECK(i_box.re_hi > -1e-25);

  // gauss_sum(5) is the positive square root
  CHECK(numeric::certified_sign(cyc::gauss_sum(5)) == 1);
  auto g5 = numeric::embed(cyc::gauss_sum(5), 30);
  CHECK(g5.re_str.substr(0, 9) == "2.2360679");

  // tie-break order: i before -i, 2 before 1
  CHECK(numeric::tiebreak_before(zeta(4, 1), zeta(4, 3)));
  CHECK(numeric::tiebreak_before(Cyc(2), Cyc(1)));
  CHECK_FALSE(numeric::tiebreak_before(Cyc(1), Cyc(2)));
}

TEST_CASE("to_string round trips visually") {
  CHECK(Cyc(Rat(-3, 2)).to_string() == "-3/2");
  // zeta_5^4 = -1 - z - z^2 - z^3 in the reduced basis
  CHECK((zeta(5, 1) + zeta(5, 4)).to_string() == "-1 - z5^2 - z5^3");
  CHECK((zeta(8, 1) + Cyc(2)).to_string() == "2 + z8");
  CHECK(Cyc(0).to_string() == "0");
}
