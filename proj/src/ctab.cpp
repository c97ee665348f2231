#include <algorithm>

#include "ctab.hpp"

namespace ctab {

cyc::Cyc inner_product_cyc(const ClassFunction& f, const ClassFunction& g) {
  if (f.gd != g.gd) throw GroupMismatch();
  const auto& C = f.gd->C;
  cyc::Cyc sum;
  for (int j = 0; j < C.count(); ++j) {
    cyc::Cyc term = (f.values[j] * g.values[j].conj()).reduced();
    sum = sum + cyc::Rat((long)C.size[j]) * term;
  }
  return (cyc::Rat(1, (unsigned long)f.gd->G.order()) * sum).reduced();
}

cyc::Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
  return inner_product_cyc(f, g).rational_value();
}

ClassFunction restrict_to(const ClassFunction& chi, const GroupDataPtr& U) {
  const GroupDataPtr& X = chi.gd;
  ClassFunction out;
  out.gd = U;
  out.values.resize(U->C.count());
  for (int j = 0; j < U->C.count(); ++j) {
    std::int32_t xi = X->G.index_of(U->G.elems[U->C.rep[j]]);
    if (xi < 0) throw grp::NotSubgroup();
    out.values[j] = chi.values[X->C.class_of[xi]];
  }
  return out;
}

ClassFunction induce_from(const ClassFunction& mu, const GroupDataPtr& X) {
  const GroupDataPtr& U = mu.gd;
  // mu^X(g) = |C_X(g)| / |U| * sum over U-classes fused into the class of g
  ClassFunction out;
  out.gd = X;
  out.values.assign(X->C.count(), cyc::Cyc(0));
  std::vector<cyc::Cyc> acc(X->C.count(), cyc::Cyc(0));
  for (int j = 0; j < U->C.count(); ++j) {
    std::int32_t xi = X->G.index_of(U->G.elems[U->C.rep[j]]);
    if (xi < 0) throw grp::NotSubgroup();
    int l = X->C.class_of[xi];
    acc[l] = acc[l] + cyc::Rat((long)U->C.size[j]) * mu.values[j];
  }
  for (int l = 0; l < X->C.count(); ++l) {
    cyc::Rat factor((long)(X->G.order() / X->C.size[l]));
    factor /= cyc::Rat((unsigned long)U->G.order());
    out.values[l] = (factor * acc[l]).reduced();
  }
  return out;
}

CharacterPredicates character_predicates(const ClassFunction& chi) {
  CharacterPredicates out;
  const auto& C = chi.gd->C;
  out.degree = chi.values[chi.gd->identity_class].rational_value().get_num().get_si();
  out.is_real = true;
  out.is_rational = true;
  for (const auto& v : chi.values) {
    if (!(v.conj() == v)) out.is_real = false;
    if (!v.is_rational()) out.is_rational = false;
  }
  cyc::Cyc deg = chi.values[chi.gd->identity_class];
  for (int j = 0; j < C.count(); ++j)
    if (chi.values[j] == deg) out.kernel_classes.push_back(j);
  cyc::Rat dinv(1, (unsigned long)out.degree);
  for (int j = 0; j < C.count(); ++j)
    if (C.size[j] == 1)
      out.central_character.push_back((dinv * chi.values[j]).reduced());
  return out;
}

std::vector<int> l_prime_subset(const CharacterTable& T, std::int64_t ell) {
  std::vector<int> out;
  for (int i = 0; i < T.count(); ++i)
    if (T.degrees[i] % ell != 0) out.push_back(i);
  return out;
}

std::vector<int> extensions(const CharacterTable& TSigma, const GroupDataPtr& X,
                            const ClassFunction& chi) {
  const grp::Group& S = TSigma.gd->G;
  // X normal in Sigma: conjugates of X generators stay in X
  for (auto sgi : S.gens) {
    const auto& s = S.elems[sgi];
    grp::GroupElement si = S.inv(s);
    for (auto xgi : X->G.gens) {
      grp::GroupElement y = S.mul(si, S.mul(X->G.elems[xgi], s));
      if (!X->G.contains(y)) throw NotNormal();
    }
  }
  std::vector<int> out;
  for (int i = 0; i < TSigma.count(); ++i) {
    ClassFunction res = restrict_to(TSigma.row(i), X);
    bool same = true;
    for (size_t j = 0; j < res.values.size() && same; ++j)
      if (!(res.values[j] == chi.values[j])) same = false;
    if (same) out.push_back(i);
  }
  return out;
}

int Labeling::at(const std::string& name) const {
  auto it = row_of.find(name);
  if (it == row_of.end()) throw LabelingFailure("no row labeled " + name);
  return it->second;
}

CharacterTable dicyclic_table_formulas(int n) {
  auto gd = GroupData::make(grp::make_dicyclic(n));
  const grp::Group& G = gd->G;
  const auto& C = gd->C;
  grp::GroupElement x = G.anchor("x"), u = G.anchor("u");

  // normal form of each class representative: x^l or x^l u
  std::vector<std::pair<bool, int>> form(C.count());  // (in <x>, exponent l)
  {
    std::vector<std::int32_t> xpow;
    grp::GroupElement cur = G.identity();
    for (int l = 0; l < 2 * n; ++l) {
      xpow.push_back(G.index_of(cur));
      cur = G.mul(cur, x);
    }
    for (int c = 0; c < C.count(); ++c) {
      grp::GroupElement rep = G.elems[C.rep[c]];
      bool found = false;
      for (int l = 0; l < 2 * n && !found; ++l) {
        if (C.rep[c] == xpow[l]) {
          form[c] = {true, l};
          found = true;
        }
      }
      for (int l = 0; l < 2 * n && !found; ++l) {
        if (rep == G.mul(G.pow(x, l), u)) {
          form[c] = {false, l};
          found = true;
        }
      }
      if (!found) throw std::logic_error("dicyclic normal form failed");
    }
  }

  auto xi = [&](std::int64_t e) { return cyc::Cyc::root_of_unity(2 * n, e); };
  CharacterTable T;
  T.gd = gd;
  auto put = [&](std::vector<cyc::Cyc> row) {
    T.degrees.push_back(row[gd->identity_class].rational_value().get_num().get_si());
    T.rows.push_back(std::move(row));
  };

  {  // trivial
    std::vector<cyc::Cyc> row(C.count(), cyc::Cyc(1));
    put(std::move(row));
  }
  {  // Sgn: trivial on <x>, -1 off it
    std::vector<cyc::Cyc> row(C.count());
    for (int c = 0; c < C.count(); ++c) row[c] = cyc::Cyc(form[c].first ? 1 : -1);
    put(std::move(row));
  }
  // mu^+- : x -> -1; u -> +-1 for n even, +-i for n odd
  for (int sign : {+1, -1}) {
    cyc::Cyc uval = (n % 2 == 0) ? cyc::Cyc(sign)
                                 : cyc::Cyc::root_of_unity(4, sign == 1 ? 1 : 3);
    std::vector<cyc::Cyc> row(C.count());
    for (int c = 0; c < C.count(); ++c) {
      auto [inx, l] = form[c];
      cyc::Cyc v = cyc::Cyc(l % 2 == 0 ? 1 : -1);
      row[c] = inx ? v : (v * uval).reduced();
    }
    put(std::move(row));
  }
  // mu_j of degree 2
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<cyc::Cyc> row(C.count());
    for (int c = 0; c < C.count(); ++c) {
      auto [inx, l] = form[c];
      row[c] = inx ? (xi((std::int64_t)j * l) + xi(-(std::int64_t)j * l)).reduced()
                   : cyc::Cyc(0);
    }
    put(std::move(row));
  }

  // same deterministic order as computed tables
  std::vector<int> order((size_t)T.count());
  for (int i = 0; i < T.count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
    for (int j = 0; j < C.count(); ++j) {
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
  return S;
}

}  // namespace ctab
