#include "ff.hpp"

#include <algorithm>
#include <cassert>

namespace ff {

namespace {

using Poly = std::vector<std::int32_t>;  // coefficients mod p, low degree first

int deg(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g over GF(p), g monic
Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
  int dg = deg(g);
  for (int i = deg(f); i >= dg; --i) {
    std::int64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::int64_t t = f[i - dg + j] - c * g[j];
      t %= p;
      if (t < 0) t += p;
      f[i - dg + j] = (std::int32_t)t;
    }
  }
  f.resize(std::max(dg, 1));
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (std::int32_t)((r[i + j] + (std::int64_t)a[i] * b[j]) % p);
    }
  }
  return r;
}

bool divides(const Poly& d, const Poly& f, std::int64_t p) {
  Poly r = poly_mod(f, d, p);
  return deg(r) < 0;
}

// irreducible over GF(p) by trial division against all monic polynomials of
// degree 1..deg(f)/2
bool poly_irreducible(const Poly& f, std::int64_t p) {
  int df = deg(f);
  if (df <= 0) return false;
  if (df == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  for (int d = 1; 2 * d <= df; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t enc = 0; enc < count; ++enc) {
      Poly g(d + 1, 0);
      std::int64_t e = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = (std::int32_t)(e % p);
        e /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

FieldPtr FiniteField::make(std::int64_t p, int n) {
  if (!is_prime(p)) throw NonPrime(p);
  if (n < 1) throw TooLarge("extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > (std::int64_t(1) << 31)) throw TooLarge("p^n exceeds 2^31");
  }

  auto F = std::shared_ptr<FiniteField>(new FiniteField());
  F->p_ = p;
  F->n_ = n;
  F->q_ = q;

  // smallest monic irreducible of degree n in index encoding
  if (n == 1) {
    F->modulus_ = {0, 1};  // x
  } else {
    bool found = false;
    for (std::int64_t enc = 0; enc < q && !found; ++enc) {
      Poly f(n + 1, 0);
      std::int64_t e = enc;
      for (int i = 0; i < n; ++i) {
        f[i] = (std::int32_t)(e % p);
        e /= p;
      }
      f[n] = 1;
      if (poly_irreducible(f, p)) {
        F->modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  if (q <= kTableCap) {
    F->add_table_.resize(q * q);
    F->mul_table_.resize(q * q);
    F->neg_table_.resize(q);
    for (std::int32_t a = 0; a < q; ++a) {
      F->neg_table_[a] = F->neg_slow(a);
      for (std::int32_t b = 0; b < q; ++b) {
        F->add_table_[(std::int64_t)a * q + b] = F->add_slow(a, b);
        F->mul_table_[(std::int64_t)a * q + b] = F->mul_slow(a, b);
      }
    }
  }
  return F;
}

std::vector<std::int32_t> FiniteField::coeffs(std::int32_t a) const {
  std::vector<std::int32_t> c(n_);
  for (int i = 0; i < n_; ++i) {
    c[i] = (std::int32_t)(a % p_);
    a = (std::int32_t)(a / p_);
  }
  return c;
}

std::int32_t FiniteField::from_coeffs(const std::vector<std::int32_t>& c) const {
  if ((int)c.size() != n_) throw std::invalid_argument("wrong coefficient count");
  std::int64_t v = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  return (std::int32_t)v;
}

std::int32_t FiniteField::add_slow(std::int32_t a, std::int32_t b) const {
  // digitwise addition mod p
  std::int64_t r = 0, place = 1;
  std::int64_t x = a, y = b;
  for (int i = 0; i < n_; ++i) {
    std::int64_t s = (x % p_ + y % p_) % p_;
    r += s * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return (std::int32_t)r;
}

std::int32_t FiniteField::neg_slow(std::int32_t a) const {
  std::int64_t r = 0, place = 1, x = a;
  for (int i = 0; i < n_; ++i) {
    std::int64_t s = (p_ - x % p_) % p_;
    r += s * place;
    place *= p_;
    x /= p_;
  }
  return (std::int32_t)r;
}

std::int32_t FiniteField::mul_slow(std::int32_t a, std::int32_t b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly pr = poly_mul(pa, pb, p_);
  pr = poly_mod(pr, modulus_, p_);
  pr.resize(n_, 0);
  return from_coeffs(pr);
}

std::int32_t FiniteField::add(std::int32_t a, std::int32_t b) const {
  if (!add_table_.empty()) return add_table_[(std::int64_t)a * q_ + b];
  return add_slow(a, b);
}

std::int32_t FiniteField::neg(std::int32_t a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  return neg_slow(a);
}

std::int32_t FiniteField::sub(std::int32_t a, std::int32_t b) const {
  return add(a, neg(b));
}

std::int32_t FiniteField::mul(std::int32_t a, std::int32_t b) const {
  if (!mul_table_.empty()) return mul_table_[(std::int64_t)a * q_ + b];
  return mul_slow(a, b);
}

std::int32_t FiniteField::pow(std::int32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::int32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int32_t FiniteField::inv(std::int32_t a) const {
  if (a == 0) throw DivisionByZero();
  return pow(a, q_ - 2);
}

std::int32_t FiniteField::div(std::int32_t a, std::int32_t b) const {
  return mul(a, inv(b));
}

std::int32_t FiniteField::frobenius(std::int32_t a, std::int64_t k) const {
  k %= n_;  // x^q = x
  std::int32_t r = a;
  for (std::int64_t i = 0; i < k; ++i) r = pow(r, p_);
  return r;
}

std::int64_t FiniteField::element_order(std::int32_t a) const {
  if (a == 0) throw DivisionByZero();
  std::int64_t ord = q_ - 1;
  for (std::int64_t r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

std::int32_t FiniteField::generator() const {
  if (generator_ >= 0) return generator_;
  auto primes = prime_factors(q_ - 1);
  for (std::int32_t a = 1; a < q_; ++a) {
    bool ok = true;
    for (std::int64_t r : primes) {
      if (pow(a, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok && pow(a, q_ - 1) == 1) {
      generator_ = a;
      return a;
    }
  }
  throw std::logic_error("no generator found");
}

std::string FiniteField::to_string(std::int32_t a) const {
  if (n_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s;
  for (int i = n_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace ff
