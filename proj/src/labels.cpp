#include <algorithm>

#include "ctab.hpp"
#include "numeric.hpp"

// Value-anchored character labelings.  Indexed families are matched by
// their value at a designated torus / Hall element (chi_i(a) = rho^i +
// rho^-i and so on); unordered pairs are ordered by the certified numeric
// tie-break, with the mu+/mu- pair pinned at the class of u where the
// dicyclic table prescribes mu+(u) = i (n odd) or 1 (n even).

namespace ctab {

namespace {

using cyc::Cyc;

std::vector<int> rows_of_degree(const CharacterTable& T, std::int64_t d) {
  std::vector<int> out;
  for (int i = 0; i < T.count(); ++i)
    if (T.degrees[i] == d) out.push_back(i);
  return out;
}

int class_of_anchor(const CharacterTable& T, const std::string& name) {
  const auto& gd = *T.gd;
  return gd.C.class_of[gd.G.index_of(gd.G.anchor(name))];
}

void set_label(Labeling& L, const std::string& name, int row) {
  if (!L.name_of[row].empty() || L.row_of.count(name))
    throw LabelingFailure("duplicate label assignment for " + name);
  L.row_of[name] = row;
  L.name_of[row] = name;
}

// the unique row among candidates taking the given value at class c
int match_value(const CharacterTable& T, const std::vector<int>& candidates,
                int c, const Cyc& value, const std::string& what) {
  int found = -1;
  for (int r : candidates) {
    if (T.rows[r][c] == value) {
      if (found >= 0) throw LabelingFailure("ambiguous match for " + what);
      found = r;
    }
  }
  if (found < 0) throw LabelingFailure("no row matches " + what);
  return found;
}

// order a two-element family: first gets subscript 1 / superscript +.
// pin_class >= 0 compares there; otherwise at the first differing class.
std::pair<int, int> order_pair(const CharacterTable& T, std::vector<int> pair,
                               int pin_class) {
  if (pair.size() != 2) throw LabelingFailure("expected a two-row family");
  int a = pair[0], b = pair[1];
  int c = pin_class;
  if (c < 0) {
    for (int j = 0; j < (int)T.rows[a].size(); ++j) {
      if (!(T.rows[a][j] == T.rows[b][j])) {
        c = j;
        break;
      }
    }
    if (c < 0) throw LabelingFailure("pair rows are identical");
  }
  if (T.rows[a][c] == T.rows[b][c])
    throw LabelingFailure("pair rows agree at the pinned class");
  return numeric::tiebreak_before(T.rows[a][c], T.rows[b][c]) ? std::pair{a, b}
                                                              : std::pair{b, a};
}

void label_trivial(const CharacterTable& T, Labeling& L) {
  for (int r : rows_of_degree(T, 1)) {
    bool allone = true;
    for (const auto& v : T.rows[r])
      if (!(v == Cyc(1))) allone = false;
    if (allone) {
      set_label(L, "1", r);
      return;
    }
  }
  throw LabelingFailure("no trivial character");
}

void label_sl2(const CharacterTable& T, Labeling& L, bool odd) {
  std::int64_t q = T.gd->G.F().q();
  int ca = class_of_anchor(T, "a");
  int cb = class_of_anchor(T, "b");
  label_trivial(T, L);
  auto psi = rows_of_degree(T, q);
  if (psi.size() != 1) throw LabelingFailure("Steinberg row is not unique");
  set_label(L, "Psi", psi[0]);

  std::int64_t imax = odd ? (q - 3) / 2 : (q - 2) / 2;
  auto chis = rows_of_degree(T, q + 1);
  if ((std::int64_t)chis.size() != imax)
    throw LabelingFailure("wrong number of degree q+1 rows");
  for (std::int64_t i = 1; i <= imax; ++i) {
    Cyc v = Cyc::root_of_unity(q - 1, i) + Cyc::root_of_unity(q - 1, -i);
    set_label(L, "chi_" + std::to_string(i),
              match_value(T, chis, ca, v, "chi_" + std::to_string(i)));
  }

  std::int64_t jmax = odd ? (q - 1) / 2 : q / 2;
  auto thetas = rows_of_degree(T, q - 1);
  if ((std::int64_t)thetas.size() != jmax)
    throw LabelingFailure("wrong number of degree q-1 rows");
  for (std::int64_t j = 1; j <= jmax; ++j) {
    Cyc v = -(Cyc::root_of_unity(q + 1, j) + Cyc::root_of_unity(q + 1, -j));
    set_label(L, "theta_" + std::to_string(j),
              match_value(T, thetas, cb, v, "theta_" + std::to_string(j)));
  }

  if (odd) {
    auto [x1, x2] = order_pair(T, rows_of_degree(T, (q + 1) / 2), -1);
    set_label(L, "xi1", x1);
    set_label(L, "xi2", x2);
    auto [e1, e2] = order_pair(T, rows_of_degree(T, (q - 1) / 2), -1);
    set_label(L, "eta1", e1);
    set_label(L, "eta2", e2);
  }
}

void label_dicyclic(const CharacterTable& T, Labeling& L) {
  const auto& G = T.gd->G;
  int n = (int)(G.order() / 4);
  int cx = class_of_anchor(T, "x");
  int cu = class_of_anchor(T, "u");
  label_trivial(T, L);
  std::vector<int> minus_at_x;
  for (int r : rows_of_degree(T, 1)) {
    if (!L.name_of[r].empty()) continue;
    if (T.rows[r][cx] == Cyc(1) && T.rows[r][cu] == Cyc(-1)) {
      set_label(L, "Sgn", r);
    } else if (T.rows[r][cx] == Cyc(-1)) {
      minus_at_x.push_back(r);
    }
  }
  if (!L.has("Sgn")) throw LabelingFailure("no Sgn character");
  auto [mp, mm] = order_pair(T, minus_at_x, cu);
  set_label(L, "mu+", mp);
  set_label(L, "mu-", mm);
  auto deg2 = rows_of_degree(T, 2);
  for (int j = 1; j <= n - 1; ++j) {
    Cyc v = Cyc::root_of_unity(2 * n, j) + Cyc::root_of_unity(2 * n, -j);
    set_label(L, "mu_" + std::to_string(j),
              match_value(T, deg2, cx, v, "mu_" + std::to_string(j)));
  }
}

void label_dihedral(const CharacterTable& T, Labeling& L) {
  const auto& G = T.gd->G;
  int m = (int)(G.order() / 2);
  if (m % 2 == 0)
    throw LabelingFailure("dihedral labeling is defined for odd rotation order");
  int cx = class_of_anchor(T, "x");
  label_trivial(T, L);
  for (int r : rows_of_degree(T, 1))
    if (L.name_of[r].empty()) set_label(L, "Sgn", r);
  auto deg2 = rows_of_degree(T, 2);
  for (int t = 1; t <= (m - 1) / 2; ++t) {
    Cyc v = Cyc::root_of_unity(m, t) + Cyc::root_of_unity(m, -t);
    set_label(L, "lambda_" + std::to_string(t),
              match_value(T, deg2, cx, v, "lambda_" + std::to_string(t)));
  }
}

void label_sz(const CharacterTable& T, Labeling& L) {
  std::int64_t q = T.gd->G.F().q();
  std::int64_t r2 = 2 * q;
  std::int64_t r = 1;
  while (r * r < r2) ++r;  // r^2 = 2q
  label_trivial(T, L);
  auto pi = rows_of_degree(T, q * q);
  if (pi.size() != 1) throw LabelingFailure("Steinberg (Pi) row is not unique");
  set_label(L, "Pi", pi[0]);
  auto [g1, g2] = order_pair(T, rows_of_degree(T, r * (q - 1) / 2), -1);
  set_label(L, "Gamma1", g1);
  set_label(L, "Gamma2", g2);

  int cx = class_of_anchor(T, "x");
  auto omegas = rows_of_degree(T, q * q + 1);
  for (std::int64_t s = 1; s <= (q - 2) / 2; ++s) {
    Cyc v = Cyc::root_of_unity(q - 1, s) + Cyc::root_of_unity(q - 1, -s);
    set_label(L, "Omega_" + std::to_string(s),
              match_value(T, omegas, cx, v, "Omega_" + std::to_string(s)));
  }
  // Theta/Lambda indices enumerate the orbits of the exponents under
  // {+-1, +-q} mod the Hall order; the label subscript counts orbits in
  // order of their least exponent
  auto orbit_minima = [](std::int64_t m, std::int64_t q_) {
    std::vector<std::int64_t> minima;
    std::vector<char> used(m, 0);
    for (std::int64_t e = 1; e < m; ++e) {
      if (used[e]) continue;
      minima.push_back(e);
      std::int64_t cur = e;
      for (int step = 0; step < 4; ++step) {
        used[cur] = used[(m - cur) % m] = 1;
        cur = cur * (q_ % m) % m;
      }
    }
    return minima;
  };
  int cy = class_of_anchor(T, "y");
  auto thetas = rows_of_degree(T, (q - 1) * (q - r + 1));
  auto ymin = orbit_minima(q + r + 1, q);
  if ((std::int64_t)ymin.size() != (q + r) / 4)
    throw LabelingFailure("wrong Theta orbit count");
  for (std::int64_t l = 1; l <= (std::int64_t)ymin.size(); ++l) {
    std::int64_t e = ymin[l - 1];
    Cyc v = -(Cyc::root_of_unity(q + r + 1, e) + Cyc::root_of_unity(q + r + 1, -e) +
              Cyc::root_of_unity(q + r + 1, e * q) +
              Cyc::root_of_unity(q + r + 1, -e * q));
    set_label(L, "Theta_" + std::to_string(l),
              match_value(T, thetas, cy, v, "Theta_" + std::to_string(l)));
  }
  int cz = class_of_anchor(T, "z");
  auto lambdas = rows_of_degree(T, (q - 1) * (q + r + 1));
  auto zmin = orbit_minima(q - r + 1, q);
  if ((std::int64_t)zmin.size() != (q - r) / 4)
    throw LabelingFailure("wrong Lambda orbit count");
  for (std::int64_t l = 1; l <= (std::int64_t)zmin.size(); ++l) {
    std::int64_t e = zmin[l - 1];
    Cyc v = -(Cyc::root_of_unity(q - r + 1, e) + Cyc::root_of_unity(q - r + 1, -e) +
              Cyc::root_of_unity(q - r + 1, e * q) +
              Cyc::root_of_unity(q - r + 1, -e * q));
    set_label(L, "Lambda_" + std::to_string(l),
              match_value(T, lambdas, cz, v, "Lambda_" + std::to_string(l)));
  }
}

void label_sz_sylow(const CharacterTable& T, Labeling& L) {
  std::int64_t q = T.gd->G.F().q();
  std::int64_t r = 1;
  while (r * r < 2 * q) ++r;
  label_trivial(T, L);
  auto [r1, r2] = order_pair(T, rows_of_degree(T, r * (q - 1) / 2), -1);
  set_label(L, "rho1", r1);
  set_label(L, "rho2", r2);
  auto deg = rows_of_degree(T, q - 1);
  if (deg.size() != 1) throw LabelingFailure("rho3 row is not unique");
  set_label(L, "rho3", deg[0]);
}

}  // namespace

Labeling label_characters(const CharacterTable& T, Family family) {
  Labeling L;
  L.name_of.assign(T.count(), "");
  switch (family) {
    case Family::Sl2Odd:
      label_sl2(T, L, true);
      break;
    case Family::Sl2Even:
      label_sl2(T, L, false);
      break;
    case Family::Dicyclic:
      label_dicyclic(T, L);
      break;
    case Family::Dihedral:
      label_dihedral(T, L);
      break;
    case Family::Sz:
      label_sz(T, L);
      break;
    case Family::SzSylow:
      label_sz_sylow(T, L);
      break;
  }
  return L;
}

}  // namespace ctab
