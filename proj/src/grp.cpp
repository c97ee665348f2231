#include "grp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace grp {

Mat mat_identity(int d) {
  Mat m;
  m.d = d;
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const ff::FiniteField& F, const Mat& a, const Mat& b) {
  Mat r;
  r.d = a.d;
  for (int i = 0; i < a.d; ++i) {
    for (int j = 0; j < a.d; ++j) {
      std::int32_t s = 0;
      for (int k = 0; k < a.d; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = s;
    }
  }
  return r;
}

Mat mat_inverse(const ff::FiniteField& F, const Mat& a) {
  int d = a.d;
  // augmented [a | I], row reduce
  std::array<std::array<std::int32_t, 8>, 4> w{};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) w[i][j] = a.at(i, j);
    w[i][d + i] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i)
      if (w[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix");
    std::swap(w[col], w[piv]);
    std::int32_t ipv = F.inv(w[col][col]);
    for (int j = 0; j < 2 * d; ++j) w[col][j] = F.mul(w[col][j], ipv);
    for (int i = 0; i < d; ++i) {
      if (i == col || w[i][col] == 0) continue;
      std::int32_t f = w[i][col];
      for (int j = 0; j < 2 * d; ++j)
        w[i][j] = F.sub(w[i][j], F.mul(f, w[col][j]));
    }
  }
  Mat r;
  r.d = d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, j) = w[i][d + j];
  return r;
}

AutomorphismMap AutomorphismMap::identity() { return AutomorphismMap(); }

AutomorphismMap AutomorphismMap::frobenius(int k) {
  AutomorphismMap a;
  Step s;
  s.frob_k = k;
  s.conj = false;
  a.steps_.push_back(s);
  return a;
}

AutomorphismMap AutomorphismMap::conjugation_by(const ff::FiniteField& F,
                                                const Mat& t) {
  AutomorphismMap a;
  Step s;
  s.conj = true;
  s.t = t;
  s.t_inv = mat_inverse(F, t);
  a.steps_.push_back(s);
  return a;
}

AutomorphismMap AutomorphismMap::then(const AutomorphismMap& next) const {
  AutomorphismMap a = *this;
  a.steps_.insert(a.steps_.end(), next.steps_.begin(), next.steps_.end());
  return a;
}

AutomorphismMap AutomorphismMap::inverse() const {
  AutomorphismMap a;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    Step s = *it;
    if (s.conj) {
      std::swap(s.t, s.t_inv);
    } else {
      s.frob_k = -s.frob_k;
    }
    a.steps_.push_back(s);
  }
  return a;
}

Mat AutomorphismMap::apply(const ff::FiniteField& F, const Mat& x) const {
  Mat r = x;
  for (const Step& s : steps_) {
    if (s.conj) {
      r = mat_mul(F, mat_mul(F, s.t_inv, r), s.t);
    } else {
      int n = F.n();
      int k = ((s.frob_k % n) + n) % n;
      if (k != 0)
        for (int i = 0; i < r.d * r.d; ++i) r.e[i] = F.frobenius(r.e[i], k);
    }
  }
  return r;
}

GroupElement AutomorphismMap::apply(const ff::FiniteField& F,
                                    const GroupElement& x) const {
  if (x.tw != 0)
    throw std::invalid_argument("automorphism rules act on matrix parts only");
  return {apply(F, x.m), 0};
}

GroupElement Group::identity() const { return {mat_identity(dim), 0}; }

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  if (twist_mod == 1) return {mat_mul(F(), a.m, b.m), 0};
  Mat bm = a.tw == 0 ? b.m : twist_pow[a.tw].apply(F(), b.m);
  return {mat_mul(F(), a.m, bm), (std::int32_t)((a.tw + b.tw) % twist_mod)};
}

GroupElement Group::inv(const GroupElement& a) const {
  if (twist_mod == 1) return {mat_inverse(F(), a.m), 0};
  // (g, i)^-1 = (phi^-i(g^-1), -i)
  std::int32_t j = (std::int32_t)((twist_mod - a.tw) % twist_mod);
  Mat gi = mat_inverse(F(), a.m);
  Mat r = a.tw == 0 ? gi : twist_pow[a.tw].inverse().apply(F(), gi);
  return {r, j};
}

GroupElement Group::pow(const GroupElement& a, std::int64_t e) const {
  GroupElement base = a, r = identity();
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::int64_t Group::element_order(const GroupElement& a) const {
  GroupElement x = a;
  GroupElement id = identity();
  std::int64_t n = 1;
  while (!(x == id)) {
    x = mul(x, a);
    ++n;
    if (n > order() + 1) throw std::logic_error("element order exceeds group order");
  }
  return n;
}

std::uint64_t Group::key(const GroupElement& a) const {
  unsigned __int128 k = 0;
  std::int64_t q = field->q();
  for (int i = dim * dim - 1; i >= 0; --i) k = k * q + a.m.e[i];
  k = k * twist_mod + a.tw;
  if (k >> 63) throw Unsupported("element key exceeds 64 bits");
  return (std::uint64_t)k;
}

std::int32_t Group::index_of(const GroupElement& a) const {
  auto it = pos_.find(key(a));
  return it == pos_.end() ? -1 : it->second;
}

bool Group::contains_group(const Group& S) const {
  for (const auto& e : S.elems)
    if (!contains(e)) return false;
  return true;
}

bool Group::same_element_set(const Group& other) const {
  return order() == other.order() && contains_group(other);
}

GroupElement Group::anchor(const std::string& name) const {
  auto it = anchors.find(name);
  if (it == anchors.end()) throw std::invalid_argument("unknown anchor " + name);
  return elems[it->second];
}

std::int64_t Group::exponent() const {
  std::int64_t e = 1;
  for (const auto& g : elems) e = std::lcm(e, element_order(g));
  return e;
}

Group generate(ff::FieldPtr field, int dim, int twist_mod,
               const AutomorphismMap& twist, std::vector<GroupElement> gens,
               std::int64_t cap) {
  Group G;
  G.field = std::move(field);
  G.dim = dim;
  G.twist_mod = twist_mod;
  if (twist_mod > 1) {
    G.twist_pow.resize(twist_mod);
    G.twist_pow[0] = AutomorphismMap::identity();
    for (int i = 1; i < twist_mod; ++i)
      G.twist_pow[i] = G.twist_pow[i - 1].then(twist);
  }
  std::sort(gens.begin(), gens.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              return G.key(a) < G.key(b);
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  GroupElement id = G.identity();
  G.elems.push_back(id);
  G.pos_[G.key(id)] = 0;
  for (std::size_t head = 0; head < G.elems.size(); ++head) {
    GroupElement x = G.elems[head];  // copy: elems may reallocate
    for (const auto& g : gens) {
      GroupElement y = G.mul(x, g);
      std::uint64_t k = G.key(y);
      if (G.pos_.emplace(k, (std::int32_t)G.elems.size()).second) {
        G.elems.push_back(y);
        if ((std::int64_t)G.elems.size() > cap) throw CapExceeded();
      }
    }
  }
  for (const auto& g : gens) G.gens.push_back(G.index_of(g));
  return G;
}

Group subgroup_from_elements(const Group& G, std::vector<GroupElement> elems) {
  Group S;
  S.field = G.field;
  S.dim = G.dim;
  S.twist_mod = G.twist_mod;
  S.twist_pow = G.twist_pow;
  std::sort(elems.begin(), elems.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              return G.key(a) < G.key(b);
            });
  S.elems = std::move(elems);
  for (std::size_t i = 0; i < S.elems.size(); ++i)
    S.pos_[S.key(S.elems[i])] = (std::int32_t)i;

  // greedy generating set in key order
  std::vector<GroupElement> gens;
  std::int64_t closed = 1;
  for (const auto& e : S.elems) {
    if (closed == (std::int64_t)S.elems.size()) break;
    if (e == S.identity()) continue;
    gens.push_back(e);
    Group T = generate(S.field, S.dim, S.twist_mod,
                       S.twist_mod > 1 ? S.twist_pow[1] : AutomorphismMap::identity(),
                       gens, (std::int64_t)S.elems.size());
    if (T.order() == closed) {
      gens.pop_back();  // no progress
    } else {
      closed = T.order();
    }
  }
  for (const auto& g : gens) S.gens.push_back(S.index_of(g));
  if (S.gens.empty() && !S.elems.empty()) S.gens.push_back(0);  // trivial group
  return S;
}

ConjugacyClasses conjugacy_classes(const Group& G) {
  ConjugacyClasses C;
  C.G = &G;
  std::int64_t n = G.order();
  C.class_of.assign(n, -1);

  // scan elements in ascending key order so each class seed is key-least
  std::vector<std::int32_t> by_key(n);
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::int32_t a, std::int32_t b) {
    return G.key(G.elems[a]) < G.key(G.elems[b]);
  });

  std::vector<GroupElement> gen_elems, gen_inv;
  for (auto gi : G.gens) {
    gen_elems.push_back(G.elems[gi]);
    gen_inv.push_back(G.inv(G.elems[gi]));
  }

  for (std::int32_t seed : by_key) {
    if (C.class_of[seed] >= 0) continue;
    std::int32_t cls = (std::int32_t)C.rep.size();
    std::vector<std::int32_t> orbit = {seed};
    C.class_of[seed] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      GroupElement x = G.elems[orbit[head]];
      for (std::size_t gi = 0; gi < gen_elems.size(); ++gi) {
        GroupElement y = G.mul(gen_inv[gi], G.mul(x, gen_elems[gi]));
        std::int32_t yi = G.index_of(y);
        if (C.class_of[yi] < 0) {
          C.class_of[yi] = cls;
          orbit.push_back(yi);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(), [&](std::int32_t a, std::int32_t b) {
      return G.key(G.elems[a]) < G.key(G.elems[b]);
    });
    C.rep.push_back(orbit.front());
    C.size.push_back((std::int64_t)orbit.size());
    C.rep_order.push_back(G.element_order(G.elems[orbit.front()]));
    C.members.push_back(std::move(orbit));
  }

  C.inverse_class.resize(C.count());
  for (int c = 0; c < C.count(); ++c)
    C.inverse_class[c] = C.class_of[G.index_of(G.inv(G.elems[C.rep[c]]))];
  return C;
}

std::int32_t ConjugacyClasses::power_class(std::int32_t c, std::int64_t t) const {
  std::int64_t o = rep_order[c];
  t %= o;
  if (t < 0) t += o;
  return class_of[G->index_of(G->pow(G->elems[rep[c]], t))];
}

Group normalizer(const Group& G, const Group& S) {
  if (!G.contains_group(S)) throw NotSubgroup();
  std::vector<GroupElement> sgens;
  for (auto gi : S.gens) sgens.push_back(S.elems[gi]);
  std::vector<GroupElement> result;
  for (const auto& g : G.elems) {
    GroupElement gi = G.inv(g);
    bool ok = true;
    for (const auto& s : sgens) {
      if (!S.contains(G.mul(gi, G.mul(s, g)))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(g);
  }
  return subgroup_from_elements(G, std::move(result));
}

Group centralizer_of_group(const Group& G, const Group& S) {
  std::vector<GroupElement> sgens;
  for (auto gi : S.gens) sgens.push_back(S.elems[gi]);
  std::vector<GroupElement> result;
  for (const auto& g : G.elems) {
    bool ok = true;
    for (const auto& s : sgens) {
      if (!(G.mul(g, s) == G.mul(s, g))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(g);
  }
  return subgroup_from_elements(G, std::move(result));
}

Group center(const Group& G) { return centralizer_of_group(G, G); }

std::int64_t ell_part(std::int64_t n, std::int64_t ell) {
  std::int64_t r = 1;
  while (n % ell == 0) {
    n /= ell;
    r *= ell;
  }
  return r;
}

Group sylow(const Group& G, std::int64_t ell) {
  if (G.order() % ell != 0) throw PrimeDoesNotDivide();
  std::int64_t target = ell_part(G.order(), ell);

  std::vector<std::int32_t> by_key(G.order());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::int32_t a, std::int32_t b) {
    return G.key(G.elems[a]) < G.key(G.elems[b]);
  });
  // key-least element among ell-elements of maximal order
  std::int64_t best_order = 0;
  std::int32_t best = -1;
  std::vector<std::int64_t> orders(G.order());
  for (auto i : by_key) {
    std::int64_t o = G.element_order(G.elems[i]);
    orders[i] = o;
    if (o == ell_part(o, ell) && o > best_order) {
      best_order = o;
      best = i;
    }
  }
  auto regen = [&](std::vector<GroupElement> gens) {
    return generate(G.field, G.dim, G.twist_mod,
                    G.twist_mod > 1 ? G.twist_pow[1] : AutomorphismMap::identity(),
                    std::move(gens), target);
  };
  Group P = regen({G.elems[best]});
  while (P.order() < target) {
    Group N = normalizer(G, P);
    bool grew = false;
    for (const auto& x : N.elems) {  // N is key-sorted
      std::int64_t o = orders[G.index_of(x)];
      if (o != ell_part(o, ell) || o == 1 || P.contains(x)) continue;
      std::vector<GroupElement> gens;
      for (auto gi : P.gens) gens.push_back(P.elems[gi]);
      gens.push_back(x);
      P = regen(std::move(gens));
      grew = true;
      break;
    }
    if (!grew) throw std::logic_error("sylow growth stalled");
  }
  return subgroup_from_elements(G, P.elems);
}

TorusData torus_normalizer(const Group& X, std::int64_t ell) {
  std::int64_t q = X.F().q();
  TorusData td;
  GroupElement t;
  if ((q - 1) % ell == 0) {
    td.split = true;
    t = X.anchor("a");
  } else if ((q + 1) % ell == 0) {
    td.split = false;
    // enumeration-least element of order q+1
    std::uint64_t best_key = ~0ULL;
    std::int32_t best = -1;
    for (std::int32_t i = 0; i < X.order(); ++i) {
      if (X.element_order(X.elems[i]) == q + 1 && X.key(X.elems[i]) < best_key) {
        best_key = X.key(X.elems[i]);
        best = i;
      }
    }
    if (best < 0) throw std::logic_error("no element of order q+1");
    t = X.elems[best];
  } else {
    throw NoSuchPrime();
  }
  td.torus_gen = t;
  std::int64_t torder = X.element_order(t);
  std::vector<GroupElement> telems;
  GroupElement cur = X.identity();
  for (std::int64_t i = 0; i < torder; ++i) {
    telems.push_back(cur);
    cur = X.mul(cur, t);
  }
  td.T = subgroup_from_elements(X, telems);
  std::int64_t lpart = ell_part(torder, ell);
  GroupElement lgen = X.pow(t, torder / lpart);
  std::vector<GroupElement> lelems;
  cur = X.identity();
  for (std::int64_t i = 0; i < lpart; ++i) {
    lelems.push_back(cur);
    cur = X.mul(cur, lgen);
  }
  td.L = subgroup_from_elements(X, lelems);
  td.U = normalizer(X, td.T);
  Group NL = normalizer(X, td.L);
  if (!td.U.same_element_set(NL)) throw std::logic_error("N(T) and N(L) differ");
  Group NU = normalizer(X, td.U);
  if (!NU.same_element_set(td.U))
    throw std::logic_error("torus normalizer is not self-normalizing");
  // labeling anchors: torus generator and the key-least reflection part
  td.U.anchors["x"] = td.U.index_of(t);
  for (std::int32_t i = 0; i < td.U.order(); ++i) {  // U elems are key-sorted
    if (!td.T.contains(td.U.elems[i])) {
      td.U.anchors["u"] = i;
      break;
    }
  }
  return td;
}

AutomorphismMap stabilize_on_subgroup(const AutomorphismMap& phi, const Group& U,
                                      const Group& X) {
  std::vector<GroupElement> ugens;
  for (auto gi : U.gens) ugens.push_back(U.elems[gi]);
  auto fixes = [&](const AutomorphismMap& m) {
    for (const auto& u : ugens)
      if (!U.contains(m.apply(X.F(), u))) return false;
    return true;
  };
  if (fixes(phi)) return phi;
  std::vector<std::int32_t> by_key((std::size_t)X.order());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::int32_t a, std::int32_t b) {
    return X.key(X.elems[a]) < X.key(X.elems[b]);
  });
  for (auto i : by_key) {
    AutomorphismMap cand =
        phi.then(AutomorphismMap::conjugation_by(X.F(), X.elems[i].m));
    if (fixes(cand)) return cand;
  }
  throw NotIntravariant();
}

Group semidirect_by_automorphism(const Group& G, const AutomorphismMap& phi,
                                 int m) {
  if (G.twist_mod != 1)
    throw Unsupported("nested semidirect products are not supported");
  AutomorphismMap pm = AutomorphismMap::identity();
  for (int i = 0; i < m; ++i) pm = pm.then(phi);
  for (auto gi : G.gens) {
    if (!(pm.apply(G.F(), G.elems[gi].m) == G.elems[gi].m)) throw OrderMismatch();
  }
  std::vector<GroupElement> gens;
  for (auto gi : G.gens) gens.push_back({G.elems[gi].m, 0});
  if (m > 1) gens.push_back({mat_identity(G.dim), 1});
  Group S = generate(G.field, G.dim, m, phi, gens, G.order() * (std::int64_t)m);
  if (S.order() != G.order() * m) throw OrderMismatch();
  return S;
}

bool is_automorphism(const Group& G, const AutomorphismMap& phi) {
  std::int64_t n = G.order();
  std::vector<std::int32_t> image(n);
  std::vector<char> seen(n, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    GroupElement y = phi.apply(G.F(), G.elems[i]);
    std::int32_t j = G.index_of(y);
    if (j < 0 || seen[j]) return false;
    seen[j] = 1;
    image[i] = j;
  }
  auto check_pair = [&](std::int32_t i, std::int32_t j) {
    GroupElement lhs = phi.apply(G.F(), G.mul(G.elems[i], G.elems[j]));
    GroupElement rhs = G.mul(G.elems[image[i]], G.elems[image[j]]);
    return lhs == rhs;
  };
  if (n <= 4096) {
    for (std::int32_t i = 0; i < n; ++i)
      for (std::int32_t j = 0; j < n; ++j)
        if (!check_pair(i, j)) return false;
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;  // fixed-seed sample
    for (int k = 0; k < 1000000; ++k) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      std::int32_t i = (std::int32_t)((state >> 16) % n);
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      std::int32_t j = (std::int32_t)((state >> 16) % n);
      if (!check_pair(i, j)) return false;
    }
  }
  return true;
}

}  // namespace grp
