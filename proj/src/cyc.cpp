#include "cyc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ff.hpp"

namespace cyc {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::int64_t phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p : ff::prime_factors(n)) r = r / p * (p - 1);
  return r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = (__int128)r * b % m;
    b = (__int128)b * b % m;
    e >>= 1;
  }
  return r;
}

namespace {

using Poly = std::vector<Int>;  // low degree first

int pdeg(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// exact division f / g over Z (g monic), remainder must vanish
Poly poly_divexact(Poly f, const Poly& g) {
  int dg = pdeg(g), df = pdeg(f);
  Poly qout(std::max(df - dg + 1, 1), Int(0));
  for (int i = df; i >= dg; --i) {
    Int c = f[i];
    if (c == 0) continue;
    qout[i - dg] = c;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  if (pdeg(f) >= 0) throw std::logic_error("non-exact cyclotomic division");
  return qout;
}

struct ModulusData {
  std::int64_t N;
  std::int64_t degree;                  // phi(N)
  std::vector<Int> Phi;                 // monic, length degree+1
  std::vector<std::vector<Int>> pow;    // x^k mod Phi for degree <= k < N
};

std::map<std::int64_t, Poly> g_phi_cache;
std::map<std::int64_t, ModulusData> g_mod_cache;
std::mutex g_mutex;

const Poly& phi_poly_locked(std::int64_t N) {
  auto it = g_phi_cache.find(N);
  if (it != g_phi_cache.end()) return it->second;
  Poly result;
  if (N == 1) {
    result = {Int(-1), Int(1)};  // x - 1
  } else {
    Poly xn(N + 1, Int(0));
    xn[0] = -1;
    xn[N] = 1;  // x^N - 1
    for (std::int64_t d = 1; d < N; ++d) {
      if (N % d == 0) xn = poly_divexact(xn, phi_poly_locked(d));
    }
    result = xn;
  }
  auto [pos, _] = g_phi_cache.emplace(N, std::move(result));
  return pos->second;
}

const ModulusData& modulus_data(std::int64_t N) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_mod_cache.find(N);
  if (it != g_mod_cache.end()) return it->second;
  ModulusData d;
  d.N = N;
  d.Phi = phi_poly_locked(N);
  d.degree = pdeg(d.Phi);
  // x^k mod Phi computed iteratively: x^{k+1} = shift, fold leading term
  d.pow.resize(N >= d.degree ? N - d.degree : 0);
  std::vector<Int> cur(d.degree, Int(0));  // x^degree mod Phi
  for (std::int64_t j = 0; j < d.degree; ++j) cur[j] = -d.Phi[j];
  for (std::int64_t k = d.degree; k < N; ++k) {
    d.pow[k - d.degree] = cur;
    // multiply by x
    Int lead = cur[d.degree - 1];
    for (std::int64_t j = d.degree - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0)
      for (std::int64_t j = 0; j < d.degree; ++j) cur[j] -= lead * d.Phi[j];
  }
  auto [pos, _] = g_mod_cache.emplace(N, std::move(d));
  return pos->second;
}

// reduce sum coef[e] x^e (exponents already in [0, N)) mod Phi_N
std::vector<Rat> reduce_powers(std::int64_t N, const std::vector<Rat>& coef) {
  const ModulusData& md = modulus_data(N);
  std::vector<Rat> out(md.degree, Rat(0));
  for (std::int64_t e = 0; e < (std::int64_t)coef.size(); ++e) {
    if (coef[e] == 0) continue;
    if (e < md.degree) {
      out[e] += coef[e];
    } else {
      const auto& row = md.pow[e - md.degree];
      for (std::int64_t j = 0; j < md.degree; ++j) {
        if (row[j] != 0) out[j] += coef[e] * Rat(row[j]);
      }
    }
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::int64_t N) {
  return modulus_data(N).Phi;
}

Cyc Cyc::root_of_unity(std::int64_t N, std::int64_t e) {
  if (N < 1) throw std::invalid_argument("modulus must be positive");
  e %= N;
  if (e < 0) e += N;
  std::vector<Rat> coef(e + 1, Rat(0));
  coef[e] = 1;
  return from_powers(N, coef);
}

Cyc Cyc::from_powers(std::int64_t N, const std::vector<Rat>& coef) {
  Cyc z;
  z.n_ = N;
  std::vector<Rat> folded(N, Rat(0));
  for (std::int64_t e = 0; e < (std::int64_t)coef.size(); ++e)
    if (coef[e] != 0) folded[e % N] += coef[e];
  z.c_ = reduce_powers(N, folded);
  return z;
}

bool Cyc::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (!is_rational()) throw NotRational();
  return c_[0];
}

Cyc Cyc::lifted(std::int64_t M) const {
  if (M == n_) return *this;
  if (M % n_ != 0) throw IncompatibleModulus();
  std::int64_t s = M / n_;
  std::vector<Rat> coef((c_.size() - 1) * s + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) coef[i * s] = c_[i];
  return from_powers(M, coef);
}

Cyc Cyc::reduced() const {
  if (n_ > 1 && is_rational()) {
    Cyc z;
    z.n_ = 1;
    z.c_ = {c_[0]};
    return z;
  }
  return *this;
}

Cyc Cyc::conj() const { return galois_apply({n_, n_ - 1 == 0 ? 1 : n_ - 1}, *this); }

Cyc operator+(const Cyc& a, const Cyc& b) {
  std::int64_t M = lcm64(a.n_, b.n_);
  Cyc x = a.lifted(M), y = b.lifted(M);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    x.c_[i] += y.c_[i];
    x.c_[i].canonicalize();
  }
  return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  std::int64_t M = lcm64(a.n_, b.n_);
  Cyc x = a.lifted(M), y = b.lifted(M);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    x.c_[i] -= y.c_[i];
    x.c_[i].canonicalize();
  }
  return x;
}

Cyc Cyc::operator-() const {
  Cyc x = *this;
  for (auto& r : x.c_) r = -r;
  return x;
}

Cyc operator*(const Rat& r, const Cyc& a) {
  Cyc x = a;
  for (auto& ci : x.c_) {
    ci *= r;
    ci.canonicalize();
  }
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  // fast paths keep table arithmetic at small moduli
  if (a.is_rational()) return a.c_[0] * b;
  if (b.is_rational()) return b.c_[0] * a;
  std::int64_t M = lcm64(a.n_, b.n_);
  Cyc x = a.lifted(M), y = b.lifted(M);
  std::vector<Rat> conv(x.c_.size() + y.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      conv[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return Cyc::from_powers(M, conv);
}

bool operator==(const Cyc& a, const Cyc& b) {
  std::int64_t M = lcm64(a.n_, b.n_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

int Cyc::cmp(const Cyc& a, const Cyc& b) {
  Cyc x = a.reduced(), y = b.reduced();
  if (x.n_ != y.n_) {
    std::int64_t M = lcm64(x.n_, y.n_);
    Cyc xl = x.lifted(M), yl = y.lifted(M);
    if (xl.c_ == yl.c_) return 0;
    x = xl;
    y = yl;
  }
  for (size_t i = 0; i < x.c_.size(); ++i) {
    int c = ::cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyc::to_string() const {
  Cyc z = reduced();
  if (z.n_ == 1) return z.c_[0].get_str();
  std::string s;
  for (size_t i = 0; i < z.c_.size(); ++i) {
    const Rat& r = z.c_[i];
    if (r == 0) continue;
    bool neg = r < 0;
    Rat ab = abs(r);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mag = ab.get_str();
    if (i == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag + "*";
      s += "z" + std::to_string(z.n_);
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

Cyc galois_apply(const GaloisAutomorphism& sigma, const Cyc& z) {
  if (sigma.N % z.modulus() != 0) throw IncompatibleModulus();
  if (gcd64(sigma.k, sigma.N) != 1) throw std::invalid_argument("k not a unit");
  Cyc x = z.lifted(sigma.N);
  std::int64_t N = sigma.N;
  std::vector<Rat> coef(N, Rat(0));
  const auto& c = x.coeffs();
  for (std::int64_t i = 0; i < (std::int64_t)c.size(); ++i) {
    if (c[i] == 0) continue;
    coef[(__int128)i * sigma.k % N] += c[i];
  }
  return Cyc::from_powers(N, coef);
}

HSubgroup h_subgroup(std::int64_t ell, std::int64_t N) {
  HSubgroup H;
  H.ell = ell;
  H.N = N;
  std::int64_t Nl = N;
  while (Nl % ell == 0) Nl /= ell;  // ell'-part of N
  // powers of ell mod the ell'-part
  std::vector<char> isPow(Nl, 0);
  std::int64_t v = 1 % Nl;
  while (!isPow[v]) {
    isPow[v] = 1;
    v = (__int128)v * (ell % Nl) % Nl;
  }
  for (std::int64_t k = 0; k < N; ++k) {
    if (gcd64(k, N) != 1) continue;
    if (Nl == 1 || isPow[k % Nl]) H.members.push_back(k);
  }
  return H;
}

HSubgroup full_galois_group(std::int64_t N) {
  HSubgroup H;
  H.ell = 0;
  H.N = N;
  for (std::int64_t k = 0; k < N; ++k)
    if (gcd64(k, N) == 1) H.members.push_back(k);
  return H;
}

namespace {

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// smallest divisor d of m with ker((Z/m)^x -> (Z/d)^x) inside the stabilizer
std::int64_t conductor_from_stabilizer(std::int64_t m,
                                       const std::vector<std::int64_t>& stab) {
  std::vector<char> inStab(m, 0);
  for (auto k : stab) inStab[k] = 1;
  for (std::int64_t d : divisors(m)) {
    bool ok = true;
    for (std::int64_t k = 1; k < m && ok; ++k) {
      if (gcd64(k, m) != 1) continue;
      if (k % d == 1 % d && !inStab[k]) ok = false;
    }
    if (ok) return d;
  }
  return m;
}

}  // namespace

std::int64_t conductor_of_value(const Cyc& zin) {
  Cyc z = zin.reduced();
  std::int64_t m = z.modulus();
  if (m == 1) return 1;
  std::vector<std::int64_t> stab;
  for (std::int64_t k = 1; k < m; ++k) {
    if (gcd64(k, m) != 1) continue;
    if (galois_apply({m, k}, z) == z) stab.push_back(k);
  }
  return conductor_from_stabilizer(m, stab);
}

std::int64_t conductor_of_values(const std::vector<Cyc>& values) {
  std::int64_t c = 1;
  for (const auto& z : values) c = lcm64(c, conductor_of_value(z));
  return c;
}

std::int64_t conductor_of_values_direct(const std::vector<Cyc>& values) {
  std::int64_t M = 1;
  for (const auto& z : values) M = lcm64(M, z.reduced().modulus());
  if (M == 1) return 1;
  std::vector<Cyc> lifted;
  lifted.reserve(values.size());
  for (const auto& z : values) lifted.push_back(z.reduced().lifted(M));
  std::vector<std::int64_t> stab;
  for (std::int64_t k = 1; k < M; ++k) {
    if (gcd64(k, M) != 1) continue;
    bool fixes = true;
    for (const auto& z : lifted) {
      if (galois_apply({M, k}, z) != z) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(k);
  }
  return conductor_from_stabilizer(M, stab);
}

int legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::int64_t r = mod_pow(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

Cyc gauss_sum(std::int64_t p) {
  if (p <= 2 || !ff::is_prime(p)) throw std::invalid_argument("need an odd prime");
  std::vector<Rat> coef(p, Rat(0));
  for (std::int64_t k = 1; k < p; ++k) coef[k] = legendre(k, p);
  return Cyc::from_powers(p, coef);
}

}  // namespace cyc
