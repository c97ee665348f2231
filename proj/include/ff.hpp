#pragma once

// Exact arithmetic in GF(p^n).
//
// Elements are stored as integer indices in [0, q): the element with
// coordinates (c_0, ..., c_{n-1}) in the power basis of the modulus has
// index sum c_i p^i.  This encoding is the canonical element order used
// everywhere a "first element such that ..." search appears, so results
// are reproducible across runs and platforms.
//
// The modulus is the monic irreducible polynomial of degree n whose
// coefficient vector has the smallest index encoding (for GF(8) that is
// x^3 + x + 1).  Irreducibility is established by trial division against
// every monic polynomial of degree <= n/2.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ff {

struct NonPrime : std::runtime_error {
  explicit NonPrime(long long p)
      : std::runtime_error("not a prime: " + std::to_string(p)) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in finite field") {}
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  // make_field: p prime (trial division), n >= 1, p^n <= 2^31.
  static FieldPtr make(std::int64_t p, int n);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t q() const { return q_; }
  // modulus coefficients c_0 .. c_n (monic, c_n = 1)
  const std::vector<std::int32_t>& modulus() const { return modulus_; }

  std::int32_t zero() const { return 0; }
  std::int32_t one() const { return 1; }

  std::int32_t add(std::int32_t a, std::int32_t b) const;
  std::int32_t sub(std::int32_t a, std::int32_t b) const;
  std::int32_t neg(std::int32_t a) const;
  std::int32_t mul(std::int32_t a, std::int32_t b) const;
  std::int32_t inv(std::int32_t a) const;  // throws DivisionByZero on 0
  std::int32_t div(std::int32_t a, std::int32_t b) const;
  std::int32_t pow(std::int32_t a, std::int64_t e) const;

  // x^(p^k); k may be any non-negative integer
  std::int32_t frobenius(std::int32_t a, std::int64_t k) const;

  // first element in index order of multiplicative order exactly q-1
  std::int32_t generator() const;

  std::int64_t element_order(std::int32_t a) const;

  std::vector<std::int32_t> coeffs(std::int32_t a) const;        // length n
  std::int32_t from_coeffs(const std::vector<std::int32_t>&) const;

  std::string to_string(std::int32_t a) const;  // e.g. "x^2+x+1" or "3"

 private:
  FiniteField() = default;
  std::int64_t p_ = 0, q_ = 0;
  int n_ = 0;
  std::vector<std::int32_t> modulus_;
  // dense tables when q <= kTableCap, else arithmetic decodes on the fly
  static constexpr std::int64_t kTableCap = 4096;
  std::vector<std::int32_t> mul_table_, add_table_, neg_table_;
  mutable std::int32_t generator_ = -1;

  std::int32_t mul_slow(std::int32_t a, std::int32_t b) const;
  std::int32_t add_slow(std::int32_t a, std::int32_t b) const;
  std::int32_t neg_slow(std::int32_t a) const;
};

// Value-style element carrying its field; used at API boundaries and in
// tests.  Hot loops inside grp/ work with raw indices instead.
struct FieldElement {
  const FiniteField* F = nullptr;
  std::int32_t v = 0;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.F, a.F->add(a.v, b.v)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {a.F, a.F->sub(a.v, b.v)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {a.F, a.F->mul(a.v, b.v)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return {a.F, a.F->div(a.v, b.v)};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    return a.F == b.F && a.v == b.v;
  }
};

bool is_prime(std::int64_t p);  // trial division
std::vector<std::int64_t> prime_factors(std::int64_t m);  // distinct, sorted

}  // namespace ff
