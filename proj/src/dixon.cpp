#include <algorithm>
#include <numeric>

#include "ctab.hpp"

// Character tables by the class-matrix congruence method.  The class sums
// C_i multiply as C_i C_j = sum_l a_{ijl} C_l; over F_r (r = 1 mod exp(G),
// r > 2|G|) the matrices M_i = (a_{ijl})_{j,l} commute and split into
// common one-dimensional eigenspaces, one per irreducible character, with
// eigenvector entries w_j = |C_j| chi(g_j) / chi(1) mod r.  Degrees are
// recovered from the orthogonality relation and the eigenvalue data lifts
// to exact cyclotomic values by an inverse DFT over the power map.

namespace ctab {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct ModP {
  u64 r;
  u64 mul(u64 a, u64 b) const { return a * b % r; }
  u64 add(u64 a, u64 b) const { return (a + b) % r; }
  u64 sub(u64 a, u64 b) const { return (a + r - b) % r; }
  u64 pow(u64 a, i64 e) const {
    u64 x = 1;
    a %= r;
    while (e > 0) {
      if (e & 1) x = mul(x, a);
      a = mul(a, a);
      e >>= 1;
    }
    return x;
  }
  u64 inv(u64 a) const { return pow(a, (i64)r - 2); }
};

u64 find_dixon_prime(i64 e, i64 order) {
  for (i64 r = e + 1;; r += e) {
    if (r > 2 * order && ff::is_prime(r)) return (u64)r;
  }
}

u64 primitive_root(const ModP& P) {
  auto facs = ff::prime_factors((i64)P.r - 1);
  for (u64 g = 2; g < P.r; ++g) {
    bool ok = true;
    for (i64 f : facs) {
      if (P.pow(g, ((i64)P.r - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw LiftFailure("no primitive root");
}

using Vec = std::vector<u64>;
using Matrix = std::vector<Vec>;

// coordinates of w in the span of basis (a consistent solution must exist)
Vec solve_in_span(const Matrix& basis, const Vec& w, const ModP& P) {
  int m = (int)basis.size(), k = (int)basis[0].size();
  Matrix A(k, Vec(m + 1, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) A[i][j] = basis[j][i];
    A[i][m] = w[i];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < k; ++col) {
    int piv = -1;
    for (int i = row; i < k; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    u64 ipv = P.inv(A[row][col]);
    for (int j = col; j <= m; ++j) A[row][j] = P.mul(A[row][j], ipv);
    for (int i = 0; i < k; ++i) {
      if (i == row || A[i][col] == 0) continue;
      u64 f = A[i][col];
      for (int j = col; j <= m; ++j) A[i][j] = P.sub(A[i][j], P.mul(f, A[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  Vec c(m, 0);
  for (int i = 0; i < (int)pivot_col.size(); ++i) c[pivot_col[i]] = A[i][m];
  for (int i = row; i < k; ++i)
    if (A[i][m] != 0) throw LiftFailure("inconsistent span solve");
  return c;
}

// monic characteristic polynomial (low-to-high coefficients) of an m x m
// matrix, by determinant interpolation at m+1 points
Vec char_poly(const Matrix& A, const ModP& P) {
  int m = (int)A.size();
  Vec xs(m + 1), ys(m + 1);
  for (int t = 0; t <= m; ++t) {
    xs[t] = (u64)t % P.r;
    Matrix B = A;
    for (int i = 0; i < m; ++i) B[i][i] = P.sub(B[i][i], xs[t]);
    u64 det = 1;
    for (int col = 0; col < m; ++col) {
      int piv = -1;
      for (int i = col; i < m; ++i)
        if (B[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(B[piv], B[col]);
        det = P.sub(0, det);
      }
      det = P.mul(det, B[col][col]);
      u64 ipv = P.inv(B[col][col]);
      for (int i = col + 1; i < m; ++i) {
        if (B[i][col] == 0) continue;
        u64 f = P.mul(B[i][col], ipv);
        for (int j = col; j < m; ++j) B[i][j] = P.sub(B[i][j], P.mul(f, B[col][j]));
      }
    }
    ys[t] = det;  // det(A - t I)
  }
  // Lagrange interpolation of det(A - x I)
  Vec poly(m + 1, 0);
  for (int t = 0; t <= m; ++t) {
    Vec num(1, 1);
    u64 den = 1;
    for (int s = 0; s <= m; ++s) {
      if (s == t) continue;
      Vec next(num.size() + 1, 0);
      for (size_t d = 0; d < num.size(); ++d) {
        next[d + 1] = P.add(next[d + 1], num[d]);
        next[d] = P.sub(next[d], P.mul(num[d], xs[s]));
      }
      num = std::move(next);
      den = P.mul(den, P.sub(xs[t], xs[s]));
    }
    u64 f = P.mul(ys[t], P.inv(den));
    for (size_t d = 0; d < num.size(); ++d)
      poly[d] = P.add(poly[d], P.mul(num[d], f));
  }
  if (poly[m] != 1) {
    u64 lead_inv = P.inv(poly[m]);
    for (auto& c : poly) c = P.mul(c, lead_inv);
  }
  return poly;
}

std::vector<u64> poly_roots(const Vec& poly, const ModP& P) {
  std::vector<u64> roots;
  for (u64 x = 0; x < P.r; ++x) {
    u64 v = 0;
    for (int d = (int)poly.size() - 1; d >= 0; --d) v = P.add(P.mul(v, x), poly[d]);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

Matrix kernel_basis(Matrix A, const ModP& P) {
  int m = (int)A.size();
  int row = 0;
  std::vector<int> pivot_of_col(m, -1);
  for (int col = 0; col < m && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    u64 ipv = P.inv(A[row][col]);
    for (int j = 0; j < m; ++j) A[row][j] = P.mul(A[row][j], ipv);
    for (int i = 0; i < m; ++i) {
      if (i == row || A[i][col] == 0) continue;
      u64 f = A[i][col];
      for (int j = 0; j < m; ++j) A[i][j] = P.sub(A[i][j], P.mul(f, A[row][j]));
    }
    pivot_of_col[col] = row;
    ++row;
  }
  Matrix out;
  for (int col = 0; col < m; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec v(m, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < m; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = P.sub(0, A[pivot_of_col[c2]][col]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::shared_ptr<GroupData> GroupData::make(grp::Group g) {
  auto d = std::make_shared<GroupData>();
  d->G = std::move(g);
  d->C = grp::conjugacy_classes(d->G);
  d->C.G = &d->G;
  d->exponent = 1;
  for (auto o : d->C.rep_order) d->exponent = std::lcm(d->exponent, o);
  d->identity_class = d->C.class_of[d->G.index_of(d->G.identity())];
  return d;
}

int CharacterTable::find_row(const std::vector<cyc::Cyc>& values) const {
  for (int i = 0; i < count(); ++i) {
    bool same = true;
    for (size_t j = 0; j < rows[i].size() && same; ++j)
      if (!(rows[i][j] == values[j])) same = false;
    if (same) return i;
  }
  return -1;
}

CharacterTable character_table(GroupDataPtr gd) {
  const grp::Group& G = gd->G;
  const grp::ConjugacyClasses& C = gd->C;
  int k = C.count();
  i64 n = G.order();
  i64 e = gd->exponent;
  ModP P{find_dixon_prime(e, n)};

  // class matrices M_i[j][l] = #{(x,y) in C_i x C_j : xy = rep_l}
  std::vector<Matrix> M(k, Matrix(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i) {
    for (auto xi : C.members[i]) {
      grp::GroupElement xinv = G.inv(G.elems[xi]);
      for (int l = 0; l < k; ++l) {
        grp::GroupElement y = G.mul(xinv, G.elems[C.rep[l]]);
        int j = C.class_of[G.index_of(y)];
        M[i][j][l] = P.add(M[i][j][l], 1);
      }
    }
  }

  // split the common eigenspaces
  std::vector<Matrix> spaces;
  {
    Matrix full(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < k && (int)spaces.size() < k; ++i) {
    if (i == gd->identity_class) continue;
    std::vector<Matrix> next;
    for (auto& basis : spaces) {
      int m = (int)basis.size();
      if (m == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // restriction A of M_i: M_i b_t = sum_s A[s][t] b_s
      Matrix A(m, Vec(m, 0));
      for (int t = 0; t < m; ++t) {
        Vec w(k, 0);
        for (int col = 0; col < k; ++col) {
          if (basis[t][col] == 0) continue;
          for (int j = 0; j < k; ++j)
            w[j] = P.add(w[j], P.mul(M[i][j][col], basis[t][col]));
        }
        Vec cvec = solve_in_span(basis, w, P);
        for (int s = 0; s < m; ++s) A[s][t] = cvec[s];
      }
      for (u64 lam : poly_roots(char_poly(A, P), P)) {
        Matrix AL = A;
        for (int d = 0; d < m; ++d) AL[d][d] = P.sub(AL[d][d], lam);
        Matrix eigenspace;  // whole eigenspace; later matrices refine it
        for (auto& kv : kernel_basis(AL, P)) {
          Vec v(k, 0);
          for (int s = 0; s < m; ++s) {
            if (kv[s] == 0) continue;
            for (int col = 0; col < k; ++col)
              v[col] = P.add(v[col], P.mul(kv[s], basis[s][col]));
          }
          eigenspace.push_back(std::move(v));
        }
        if (!eigenspace.empty()) next.push_back(std::move(eigenspace));
      }
    }
    spaces = std::move(next);
    if ((int)spaces.size() > k) throw LiftFailure("too many eigenspaces");
  }
  if ((int)spaces.size() != k) throw LiftFailure("eigenspaces did not separate");

  int i0 = gd->identity_class;
  u64 wroot = P.pow(primitive_root(P), ((i64)P.r - 1) / e);  // fixed order-e root

  CharacterTable T;
  T.gd = gd;
  for (auto& space : spaces) {
    Vec omega = space[0];
    if (omega[i0] == 0) throw LiftFailure("eigenvector vanishes at identity");
    u64 norm = P.inv(omega[i0]);
    for (auto& x : omega) x = P.mul(x, norm);

    u64 s = 0;  // sum_j omega_j omega_{j*} / |C_j|
    for (int j = 0; j < k; ++j)
      s = P.add(s, P.mul(P.mul(omega[j], omega[C.inverse_class[j]]),
                         P.inv((u64)(C.size[j] % (i64)P.r))));
    u64 d2 = P.mul((u64)(n % (i64)P.r), P.inv(s));
    i64 deg = -1;
    // d^2 <= |G| < r, so the residue d2 lifts exactly
    for (i64 d = 1; d * d <= n; ++d)
      if ((u64)(d * d) == d2) {
        deg = d;
        break;
      }
    if (deg < 0) throw LiftFailure("degree squared is not a square");

    Vec value(k);  // chi(g_j) mod r
    for (int j = 0; j < k; ++j)
      value[j] = P.mul(P.mul(omega[j], (u64)deg),
                       P.inv((u64)(C.size[j] % (i64)P.r)));

    // lift each column through the power map: chi(g) = sum_t m_t zeta_o^t,
    // m_t = (1/o) sum_s chi(g^s) z_o^{-ts}
    std::vector<cyc::Cyc> row(k);
    for (int j = 0; j < k; ++j) {
      i64 o = C.rep_order[j];
      u64 zo = P.pow(wroot, e / o);
      u64 oinv = P.inv((u64)(o % (i64)P.r));
      std::vector<cyc::Rat> mult((size_t)o);
      for (i64 t = 0; t < o; ++t) {
        u64 acc = 0;
        for (i64 sdx = 0; sdx < o; ++sdx) {
          u64 xv = value[C.power_class(j, sdx)];
          acc = P.add(acc, P.mul(xv, P.pow(zo, ((o - t) * sdx) % o)));
        }
        acc = P.mul(acc, oinv);
        if ((i64)acc > deg) throw LiftFailure("eigenvalue multiplicity out of range");
        mult[(size_t)t] = cyc::Rat((long)acc);
      }
      row[j] = cyc::Cyc::from_powers(o, mult);
    }
    T.rows.push_back(std::move(row));
    T.degrees.push_back(deg);
  }

  // deterministic row order: degree, then lexicographic values
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
    for (int j = 0; j < k; ++j) {
      int c = cyc::Cyc::cmp(T.rows[a][j], T.rows[b][j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  CharacterTable S;
  S.gd = gd;
  for (int idx : order) {
    S.rows.push_back(std::move(T.rows[idx]));
    S.degrees.push_back(T.degrees[idx]);
  }

  i64 degsum = 0;
  for (auto d : S.degrees) degsum += d * d;
  if (degsum != n) throw LiftFailure("degree squares do not sum to |G|");
  return S;
}

}  // namespace ctab
