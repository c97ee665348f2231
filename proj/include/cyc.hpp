#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is a vector of phi(N) rational coefficients in the power basis
// 1, z, ..., z^{phi(N)-1} after reduction modulo the N-th cyclotomic
// polynomial Phi_N.  Reduction mod Phi_N is canonical, so equality is
// coefficient-wise once operands sit at a common modulus; operands at
// different moduli are lifted to Q(zeta_lcm) by exponent scaling.
//
// Also here: Galois automorphisms z -> z^k, the Galois subgroups H built
// from prime powers l^f, conductors of value sets, Legendre symbols and
// Gauss sums.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyc {

using Rat = mpq_class;
using Int = mpz_class;

struct IncompatibleModulus : std::runtime_error {
  IncompatibleModulus() : std::runtime_error("incompatible cyclotomic moduli") {}
};
struct NotRational : std::runtime_error {
  NotRational() : std::runtime_error("cyclotomic value is not rational") {}
};

class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}                    // 0 in Q(zeta_1) = Q
  explicit Cyc(const Rat& r) : n_(1), c_(1, r) {}    // rational
  explicit Cyc(long v) : n_(1), c_(1, Rat(v)) {}

  // zeta_N^e; e taken mod N
  static Cyc root_of_unity(std::int64_t N, std::int64_t e);
  // from arbitrary exponent coefficients: sum coef[i] * zeta_N^i
  static Cyc from_powers(std::int64_t N, const std::vector<Rat>& coef);

  std::int64_t modulus() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws NotRational

  Cyc lifted(std::int64_t M) const;  // M must be a multiple of modulus
  // shrink modulus to 1 when the value is rational (cheap canonical form)
  Cyc reduced() const;

  Cyc conj() const;  // complex conjugation, zeta -> zeta^-1

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc operator-() const;
  friend Cyc operator*(const Rat& r, const Cyc& a);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // total order used for deterministic row sorting; compares moduli after
  // reduction, then coefficients lexicographically
  static int cmp(const Cyc& a, const Cyc& b);

  std::string to_string() const;  // "z5 + z5^4", "-3/2", ...

 private:
  std::int64_t n_;
  std::vector<Rat> c_;
};

std::int64_t phi(std::int64_t n);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m);

// coefficients of Phi_N (degree phi(N), monic), cached
const std::vector<Int>& cyclotomic_polynomial(std::int64_t N);

struct GaloisAutomorphism {
  std::int64_t N = 1;  // modulus
  std::int64_t k = 1;  // unit residue mod N
};

// zeta_N -> zeta_N^k extended linearly; sigma.N must be a multiple of the
// value's modulus (the value is lifted first)
Cyc galois_apply(const GaloisAutomorphism& sigma, const Cyc& z);

struct HSubgroup {
  std::int64_t ell = 0;  // 0 marks the full Galois group
  std::int64_t N = 1;
  std::vector<std::int64_t> members;  // unit residues mod N, sorted
};

// { k in (Z/N)^x : k = ell^f mod the ell'-part of N, some f >= 0 }
HSubgroup h_subgroup(std::int64_t ell, std::int64_t N);
// all units mod N (the full Galois group restricted to Q(zeta_N))
HSubgroup full_galois_group(std::int64_t N);

std::int64_t conductor_of_value(const Cyc& z);
std::int64_t conductor_of_values(const std::vector<Cyc>& values);
// direct single-modulus computation, for cross-checking the lcm strategy
std::int64_t conductor_of_values_direct(const std::vector<Cyc>& values);

int legendre(std::int64_t a, std::int64_t p);  // Euler's criterion

// sum_k (k/p) zeta_p^k; equals sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4
Cyc gauss_sum(std::int64_t p);

}  // namespace cyc
