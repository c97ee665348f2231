#include <algorithm>

#include "grp.hpp"

// Named constructors for the groups under verification: SL2(q), Sz(q),
// dicyclic and dihedral groups, plus the outer automorphisms of SL2(q).
//
// Suzuki construction: lower unitriangular matrices
//   S(a,b) = [ 1; a 1; a*th(a)+b th(a) 1; a^2*th(a)+a*b+th(b) b a 1 ]
// with th(x) = x^(2^(n+1)), q = 2^(2n+1), which multiply by
// S(a,b)S(c,d) = S(a+c, b+d+a*th(c)); the torus diag(l^(1+2^n), l^(2^n),
// l^(-2^n), l^(-1-2^n)) and the antidiagonal involution normalize them.
// The constructor is contract-driven: the closure must have order
// q^2(q^2+1)(q-1), exactly q+3 conjugacy classes, and a Sylow-2 normalizer
// of order q^2(q-1), otherwise construction fails.

namespace grp {

namespace {

constexpr std::int64_t kEnumerationCap = 150000;

std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int n = 0;
      std::int64_t m = q;
      while (m % p == 0) {
        m /= p;
        ++n;
      }
      if (m != 1) throw Unsupported("q is not a prime power");
      return {p, n};
    }
  }
  return {q, 1};
}

Mat mat2(const ff::FiniteField& F, std::int32_t a, std::int32_t b, std::int32_t c,
         std::int32_t d) {
  (void)F;
  Mat m;
  m.d = 2;
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

std::int64_t least_prime_1_mod(std::int64_t m) {
  for (std::int64_t p = 3;; p += 2) {
    if (p % m == 1 && ff::is_prime(p)) return p;
  }
}

}  // namespace

Group make_sl2(std::int64_t q) {
  if (q < 2 || q > 32) throw Unsupported("make_sl2 supports 2 <= q <= 32");
  auto [p, n] = factor_prime_power(q);
  auto F = ff::FiniteField::make(p, n);
  std::int32_t mu = F->generator();
  std::int32_t one = 1, zero = 0;
  Mat u1 = mat2(*F, one, one, zero, one);                      // (1,1;0,1)
  Mat w = mat2(*F, zero, one, F->neg(one), zero);              // (0,1;-1,0)
  Mat a = mat2(*F, mu, zero, zero, F->inv(mu));                // diag(mu,mu^-1)
  Group G = generate(F, 2, 1, AutomorphismMap::identity(), {{u1, 0}, {w, 0}, {a, 0}},
                     q * (q * q - 1));
  if (G.order() != q * (q * q - 1)) throw Unsupported("SL2 closure has wrong order");
  G.anchors["a"] = G.index_of({a, 0});
  G.anchors["u"] = G.index_of({w, 0});
  G.anchors["c"] = G.index_of({u1, 0});
  if (q % 2 == 1) {
    Mat z = mat2(*F, F->neg(one), zero, zero, F->neg(one));
    G.anchors["z"] = G.index_of({z, 0});
  }
  // non-split torus generator: enumeration-least element of order q+1
  {
    std::uint64_t best_key = ~0ULL;
    std::int32_t best = -1;
    for (std::int32_t i = 0; i < G.order(); ++i) {
      if (G.element_order(G.elems[i]) == q + 1 && G.key(G.elems[i]) < best_key) {
        best_key = G.key(G.elems[i]);
        best = i;
      }
    }
    if (best >= 0) G.anchors["b"] = best;
  }
  return G;
}

Group make_sz(std::int64_t q) {
  if (q != 8)
    throw Unsupported("make_sz supports q = 8 (larger Suzuki groups exceed the enumeration cap)");
  auto [p, nn] = factor_prime_power(q);
  if (p != 2 || nn % 2 == 0) throw Unsupported("Suzuki groups need q = 2^(2n+1)");
  int n = (nn - 1) / 2;
  auto F = ff::FiniteField::make(2, nn);
  std::int64_t theta_k = n + 1;  // th(x) = x^(2^(n+1))
  auto th = [&](std::int32_t x) { return F->frobenius(x, theta_k); };

  auto S = [&](std::int32_t a, std::int32_t b) {
    Mat m;
    m.d = 4;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
    m.at(1, 0) = a;
    m.at(2, 0) = F->add(F->mul(a, th(a)), b);
    m.at(2, 1) = th(a);
    m.at(3, 0) = F->add(F->add(F->mul(F->mul(a, a), th(a)), F->mul(a, b)), th(b));
    m.at(3, 1) = b;
    m.at(3, 2) = a;
    return m;
  };
  std::int32_t lam = F->generator();
  std::int64_t e = (std::int64_t)1 << n;  // 2^n
  Mat M;
  M.d = 4;
  M.at(0, 0) = F->pow(lam, 1 + e);
  M.at(1, 1) = F->pow(lam, e);
  M.at(2, 2) = F->pow(lam, -(std::int64_t)e);
  M.at(3, 3) = F->pow(lam, -(1 + e));
  Mat w;
  w.d = 4;
  w.at(0, 3) = w.at(1, 2) = w.at(2, 1) = w.at(3, 0) = 1;

  std::int64_t target = q * q * (q * q + 1) * (q - 1);
  Group G = generate(F, 4, 1, AutomorphismMap::identity(),
                     {{S(1, 0), 0}, {S(0, 1), 0}, {M, 0}, {w, 0}},
                     std::min(target, kEnumerationCap));
  if (G.order() != target) throw Unsupported("Suzuki closure has wrong order");
  ConjugacyClasses C = conjugacy_classes(G);
  if (C.count() != q + 3) throw Unsupported("Suzuki closure has wrong class count");
  Group P = sylow(G, 2);
  Group NP = normalizer(G, P);
  if (NP.order() != q * q * (q - 1))
    throw Unsupported("Suzuki Sylow-2 normalizer has wrong order");

  // designated Hall-subgroup generators: orders q-1, q+r+1, q-r+1 (r^2 = 2q)
  std::int64_t r = (std::int64_t)1 << (n + 1);
  for (auto [name, ord] : {std::pair<const char*, std::int64_t>{"x", q - 1},
                           {"y", q + r + 1},
                           {"z", q - r + 1}}) {
    std::uint64_t best_key = ~0ULL;
    std::int32_t best = -1;
    for (std::int32_t i = 0; i < G.order(); ++i) {
      if (G.element_order(G.elems[i]) == ord && G.key(G.elems[i]) < best_key) {
        best_key = G.key(G.elems[i]);
        best = i;
      }
    }
    if (best < 0) throw Unsupported("missing Hall element in Suzuki group");
    G.anchors[name] = best;
  }
  return G;
}

Group make_dicyclic(int n) {
  if (n < 2) throw Unsupported("dicyclic degree must be >= 2");
  std::int64_t p = least_prime_1_mod(2 * n);
  auto F = ff::FiniteField::make(p, 1);
  std::int32_t w = F->pow(F->generator(), (p - 1) / (2 * n));  // order 2n
  Mat x = mat2(*F, w, 0, 0, F->inv(w));
  Mat u = mat2(*F, 0, 1, F->neg(1), 0);
  Group G = generate(F, 2, 1, AutomorphismMap::identity(), {{x, 0}, {u, 0}}, 4 * n);
  if (G.order() != 4 * n) throw Unsupported("dicyclic closure has wrong order");
  G.anchors["x"] = G.index_of({x, 0});
  G.anchors["u"] = G.index_of({u, 0});
  return G;
}

Group make_dihedral(int m) {
  if (m < 2) throw Unsupported("dihedral parameter must be >= 2");
  std::int64_t p = least_prime_1_mod(m);
  auto F = ff::FiniteField::make(p, 1);
  std::int32_t w = F->pow(F->generator(), (p - 1) / m);  // order m
  Mat a = mat2(*F, w, 0, 0, F->inv(w));
  Mat s = mat2(*F, 0, 1, 1, 0);
  Group G = generate(F, 2, 1, AutomorphismMap::identity(), {{a, 0}, {s, 0}}, 2 * m);
  if (G.order() != 2 * m) throw Unsupported("dihedral closure has wrong order");
  G.anchors["a"] = G.anchors["x"] = G.index_of({a, 0});
  G.anchors["s"] = G.anchors["u"] = G.index_of({s, 0});
  return G;
}

Sl2Automorphisms make_automorphisms(const Group& X) {
  Sl2Automorphisms out;
  out.alpha = AutomorphismMap::frobenius(1);
  if (X.F().q() % 2 == 1) {
    std::int32_t mu = X.F().generator();
    Mat t = mat2(X.F(), mu, 0, 0, 1);
    out.tau = AutomorphismMap::conjugation_by(X.F(), t);
  }
  return out;
}

}  // namespace grp
