#include "verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "specs.hpp"

namespace verify {

namespace {

int find_row_or_throw(const ctab::CharacterTable& T,
                      const std::vector<cyc::Cyc>& values, const char* what) {
  int r = T.find_row(values);
  if (r < 0) throw NotClosed(what);
  return r;
}

Perm compose(const Perm& first, const Perm& second) {
  Perm out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

}  // namespace

Perm aut_action(const ctab::CharacterTable& T, const grp::AutomorphismMap& phi) {
  const auto& gd = *T.gd;
  if (!grp::is_automorphism(gd.G, phi)) throw NotClosed("map is not an automorphism");
  grp::AutomorphismMap inv = phi.inverse();
  // class permutation j -> class of phi^{-1}(rep_j)
  std::vector<int> cperm(gd.C.count());
  for (int j = 0; j < gd.C.count(); ++j) {
    grp::GroupElement pre = inv.apply(gd.G.F(), gd.G.elems[gd.C.rep[j]]);
    std::int32_t at = gd.G.index_of(pre);
    if (at < 0) throw NotClosed("automorphism leaves the group");
    cperm[j] = gd.C.class_of[at];
  }
  Perm out(T.count());
  for (int i = 0; i < T.count(); ++i) {
    std::vector<cyc::Cyc> moved(gd.C.count());
    for (int j = 0; j < gd.C.count(); ++j) moved[j] = T.rows[i][cperm[j]];
    out[i] = find_row_or_throw(T, moved, "automorphism action");
  }
  return out;
}

Perm galois_action(const ctab::CharacterTable& T, const cyc::GaloisAutomorphism& s) {
  const auto& gd = *T.gd;
  if (s.N % gd.exponent != 0) throw cyc::IncompatibleModulus();
  Perm out(T.count());
  for (int i = 0; i < T.count(); ++i) {
    std::vector<cyc::Cyc> moved(gd.C.count());
    for (int j = 0; j < gd.C.count(); ++j) {
      std::int64_t m = T.rows[i][j].modulus();
      moved[j] = cyc::galois_apply({m, s.k % m}, T.rows[i][j]);
    }
    out[i] = find_row_or_throw(T, moved, "galois action");
  }
  return out;
}

FeitReport feit_check(const ctab::CharacterTable& T) {
  FeitReport rep;
  const auto& C = T.gd->C;
  for (int i = 0; i < T.count(); ++i) {
    FeitEntry e;
    e.row = i;
    e.conductor = cyc::conductor_of_values(T.rows[i]);
    for (int c = 0; c < C.count(); ++c) {
      if (C.rep_order[c] == e.conductor) {
        e.witness_class = c;
        e.witness_order = C.rep_order[c];
        e.ok = true;
        break;
      }
    }
    if (!e.ok) rep.all_ok = false;
    rep.entries.push_back(e);
  }
  return rep;
}

namespace {

GammaAction build_gamma(const ctab::CharacterTable& TX,
                        const ctab::CharacterTable& TU, const grp::Group& X,
                        const grp::Group& U, int expected_order) {
  GammaAction A;
  A.expected_order = expected_order;
  int kx = TX.count(), ku = TU.count();
  Perm idx(kx), idu(ku);
  std::iota(idx.begin(), idx.end(), 0);
  std::iota(idu.begin(), idu.end(), 0);
  A.elements.push_back({"1", idx, idu});

  auto maps = grp::make_automorphisms(X);
  std::vector<std::pair<std::string, grp::AutomorphismMap>> gens;
  if (maps.tau)
    gens.emplace_back("tau", grp::stabilize_on_subgroup(*maps.tau, U, X));
  if (X.F().n() > 1)
    gens.emplace_back("alpha", grp::stabilize_on_subgroup(maps.alpha, U, X));

  struct GenPerm {
    std::string name;
    Perm on_x, on_u;
  };
  std::vector<GenPerm> gps;
  for (auto& [name, m] : gens) {
    GenPerm gp;
    gp.name = name;
    gp.on_x = aut_action(TX, m);
    gp.on_u = aut_action(TU, m);
    gps.push_back(std::move(gp));
  }

  // closure under composition
  auto key = [](const Perm& a, const Perm& b) {
    std::string s;
    for (int v : a) s += std::to_string(v) + ",";
    s += "|";
    for (int v : b) s += std::to_string(v) + ",";
    return s;
  };
  std::set<std::string> seen;
  seen.insert(key(idx, idu));
  for (size_t head = 0; head < A.elements.size(); ++head) {
    GammaElement cur = A.elements[head];
    for (const auto& gp : gps) {
      GammaElement nxt;
      nxt.word = cur.word == "1" ? gp.name : cur.word + "." + gp.name;
      nxt.on_x = compose(cur.on_x, gp.on_x);
      nxt.on_u = compose(cur.on_u, gp.on_u);
      if (seen.insert(key(nxt.on_x, nxt.on_u)).second)
        A.elements.push_back(std::move(nxt));
    }
  }
  if ((int)A.elements.size() != expected_order)
    throw std::logic_error("outer action has unexpected order " +
                           std::to_string(A.elements.size()) + " vs " +
                           std::to_string(expected_order));
  return A;
}

std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<McKayContext>>
    g_contexts;
std::mutex g_ctx_mutex;

}  // namespace

const McKayContext& mckay_context(std::int64_t q, std::int64_t ell) {
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  auto it = g_contexts.find({q, ell});
  if (it != g_contexts.end()) return *it->second;

  auto ctx = std::make_unique<McKayContext>();
  ctx->q = q;
  ctx->ell = ell;
  ctx->x_spec = "sl2:" + std::to_string(q);
  ctx->X = specs::group(ctx->x_spec);
  ctx->TX = &specs::table(ctx->x_spec);
  ctx->LX = ctab::label_characters(*ctx->TX,
                                   q % 2 ? ctab::Family::Sl2Odd : ctab::Family::Sl2Even);

  grp::TorusData td = grp::torus_normalizer(ctx->X->G, ell);
  ctx->split = td.split;
  ctx->U = ctab::GroupData::make(td.U);
  ctx->TU = ctab::character_table(ctx->U);
  ctx->LU = ctab::label_characters(
      ctx->TU, q % 2 ? ctab::Family::Dicyclic : ctab::Family::Dihedral);

  ctx->irr_x = ctab::l_prime_subset(*ctx->TX, ell);
  ctx->irr_u = ctab::l_prime_subset(ctx->TU, ell);

  int n = ctx->X->G.F().n();
  int expected = q % 2 ? 2 * n : n;
  ctx->gamma = build_gamma(*ctx->TX, ctx->TU, ctx->X->G, ctx->U->G, expected);

  ctx->N = std::lcm(ctx->X->exponent, ctx->U->exponent);
  ctx->H = cyc::h_subgroup(ell, ctx->N);
  for (std::int64_t k : ctx->H.members) {
    ctx->h_on_x.push_back(galois_action(*ctx->TX, {ctx->N, k}));
    ctx->h_on_u.push_back(galois_action(ctx->TU, {ctx->N, k}));
  }

  auto [pos, inserted] = g_contexts.emplace(std::make_pair(q, ell), std::move(ctx));
  (void)inserted;
  return *pos->second;
}

int OmegaBijection::image_of(int xrow) const {
  for (auto& [a, b] : pairs)
    if (a == xrow) return b;
  throw std::invalid_argument("row not in the bijection domain");
}

namespace {

// fold an index into the negation-identified range 1..m/2
std::int64_t fold_index(std::int64_t t, std::int64_t m) {
  t %= m;
  if (t < 0) t += m;
  return std::min(t, m - t);
}

OmegaBijection omega_with_assignment(const McKayContext& ctx, bool swap_pair) {
  OmegaBijection om;
  om.pair_swap = swap_pair;
  std::int64_t q = ctx.q;
  auto mapL = [&](const std::string& lx, const std::string& lu) {
    om.pairs.emplace_back(ctx.LX.at(lx), ctx.LU.at(lu));
    om.labels.emplace_back(lx, lu);
  };
  mapL("1", "1");
  mapL("Psi", "Sgn");
  if (q % 2 == 1) {
    const char* p1 = swap_pair ? "mu-" : "mu+";
    const char* p2 = swap_pair ? "mu+" : "mu-";
    if (ctx.split) {
      mapL("xi1", p1);
      mapL("xi2", p2);
      for (std::int64_t i = 1; i <= (q - 3) / 2; ++i)
        mapL("chi_" + std::to_string(i), "mu_" + std::to_string(i));
    } else {
      mapL("eta1", p1);
      mapL("eta2", p2);
      for (std::int64_t i = 1; i <= (q - 1) / 2; ++i)
        mapL("theta_" + std::to_string(i), "mu_" + std::to_string(i));
    }
  } else {
    std::int64_t m = ctx.split ? q - 1 : q + 1;
    std::int64_t imax = ctx.split ? (q - 2) / 2 : q / 2;
    for (std::int64_t i = 1; i <= imax; ++i) {
      std::string lx = (ctx.split ? "chi_" : "theta_") + std::to_string(i);
      mapL(lx, "lambda_" + std::to_string(fold_index(2 * i, m)));
    }
  }
  return om;
}

}  // namespace

EquivarianceReport check_equivariance(const McKayContext& ctx,
                                      const OmegaBijection& omega) {
  EquivarianceReport rep;
  rep.counts_ok = ctx.irr_x.size() == ctx.irr_u.size() &&
                  (int)ctx.irr_u.size() == ctx.TU.count();
  if (!rep.counts_ok)
    rep.failures.push_back("McKay counts differ: " + std::to_string(ctx.irr_x.size()) +
                           " vs " + std::to_string(ctx.irr_u.size()));
  // bijection domain must be exactly Irr_l'(X), image Irr_l'(U)
  std::set<int> dom, img;
  for (auto& [a, b] : omega.pairs) {
    dom.insert(a);
    img.insert(b);
  }
  if (dom != std::set<int>(ctx.irr_x.begin(), ctx.irr_x.end()) ||
      img != std::set<int>(ctx.irr_u.begin(), ctx.irr_u.end()) ||
      dom.size() != omega.pairs.size() || img.size() != omega.pairs.size()) {
    rep.counts_ok = false;
    rep.failures.push_back("Omega is not a bijection between the l' sets");
  }

  rep.equivariant = true;
  for (size_t g = 0; g < ctx.gamma.elements.size(); ++g) {
    const auto& ge = ctx.gamma.elements[g];
    for (size_t hk = 0; hk < ctx.H.members.size(); ++hk) {
      for (auto& [xr, ur] : omega.pairs) {
        int xi = ctx.h_on_x[hk][ge.on_x[xr]];
        int ui = ctx.h_on_u[hk][ge.on_u[ur]];
        if (omega.image_of(xi) != ui) {
          rep.equivariant = false;
          rep.failures.push_back(
              "Omega(chi^(" + ge.word + ",s" + std::to_string(ctx.H.members[hk]) +
              ")) mismatch at x-row " + std::to_string(xr));
        }
      }
    }
  }
  return rep;
}

OmegaBijection build_omega(const McKayContext& ctx) {
  OmegaBijection primary = omega_with_assignment(ctx, false);
  if (ctx.q % 2 == 0) return primary;  // no unordered pairs for even q
  OmegaBijection swapped = omega_with_assignment(ctx, true);
  bool ok1 = check_equivariance(ctx, primary).pass();
  bool ok2 = check_equivariance(ctx, swapped).pass();
  if (ok1 && ok2) {
    primary.pair_ambiguous = true;
    return primary;  // tie-break labeling stands
  }
  if (ok1) return primary;
  if (ok2) return swapped;
  throw NoConsistentAssignment();
}

std::vector<std::pair<int, std::int64_t>> joint_stabilizer_x(const McKayContext& ctx,
                                                             int xrow) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (size_t g = 0; g < ctx.gamma.elements.size(); ++g)
    for (size_t hk = 0; hk < ctx.H.members.size(); ++hk)
      if (ctx.h_on_x[hk][ctx.gamma.elements[g].on_x[xrow]] == xrow)
        out.emplace_back((int)g, ctx.H.members[hk]);
  return out;
}

std::vector<std::pair<int, std::int64_t>> joint_stabilizer_u(const McKayContext& ctx,
                                                             int urow) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (size_t g = 0; g < ctx.gamma.elements.size(); ++g)
    for (size_t hk = 0; hk < ctx.H.members.size(); ++hk)
      if (ctx.h_on_u[hk][ctx.gamma.elements[g].on_u[urow]] == urow)
        out.emplace_back((int)g, ctx.H.members[hk]);
  return out;
}

std::vector<std::vector<std::int64_t>> multiplicity_matrix(const McKayContext& ctx) {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < ctx.TX->count(); ++i) {
    ctab::ClassFunction res = ctab::restrict_to(ctx.TX->row(i), ctx.U);
    std::vector<std::int64_t> row;
    for (int j = 0; j < ctx.TU.count(); ++j) {
      cyc::Rat m = ctab::inner_product(res, ctx.TU.row(j));
      if (m.get_den() != 1 || m < 0)
        throw std::logic_error("restriction multiplicity is not a non-negative integer");
      row.push_back((std::int64_t)m.get_num().get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// chi and mu lie over the same character of Z(X); central elements of X
// normalize every torus, so Z(X) sits inside U
bool central_characters_match(const McKayContext& ctx, int xrow, int urow) {
  const auto& XC = ctx.X->C;
  cyc::Rat dx(1, (unsigned long)ctx.TX->degrees[xrow]);
  cyc::Rat du(1, (unsigned long)ctx.TU.degrees[urow]);
  for (int c = 0; c < XC.count(); ++c) {
    if (XC.size[c] != 1) continue;
    grp::GroupElement z = ctx.X->G.elems[XC.rep[c]];
    std::int32_t at = ctx.U->G.index_of(z);
    if (at < 0) throw std::logic_error("central element outside U");
    int cu = ctx.U->C.class_of[at];
    cyc::Cyc vx = dx * ctx.TX->rows[xrow][c];
    cyc::Cyc vu = du * ctx.TU.rows[urow][cu];
    if (!(vx == vu)) return false;
  }
  return true;
}

}  // namespace

CriteriaEvidence check_criteria(const McKayContext& ctx, int xrow, int urow) {
  CriteriaEvidence ev;
  ev.chi_row = xrow;
  ev.mu_row = urow;

  auto sx = joint_stabilizer_x(ctx, xrow);
  auto su = joint_stabilizer_u(ctx, urow);
  ev.precondition_ok = sx == su;

  ctab::ClassFunction res = ctab::restrict_to(ctx.TX->row(xrow), ctx.U);
  cyc::Rat m = ctab::inner_product(res, ctx.TU.row(urow));
  ev.multiplicity = (std::int64_t)m.get_num().get_si();
  ev.a_holds = ev.precondition_ok && ev.multiplicity == 1;

  ev.chi_real = ctab::character_predicates(ctx.TX->row(xrow)).is_real;
  ev.mu_real = ctab::character_predicates(ctx.TU.row(urow)).is_real;
  ev.central_match = central_characters_match(ctx, xrow, urow);

  for (const auto& ge : ctx.gamma.elements) {
    if (ge.on_x[xrow] == xrow) ++ev.out_stab_chi;
    if (ge.on_u[urow] == urow) ++ev.out_stab_mu;
  }
  ev.b_holds = ev.precondition_ok && ev.out_stab_chi == 1 && ev.central_match;
  ev.d_holds = ev.precondition_ok && ev.chi_real && ev.mu_real && ev.central_match &&
               ev.out_stab_mu % 2 == 1;

  // stabilizer of the H-orbit of chi in the outer action
  std::set<int> horbit;
  for (const auto& p : ctx.h_on_x) horbit.insert(p[xrow]);
  for (const auto& ge : ctx.gamma.elements)
    if (horbit.count(ge.on_x[xrow])) ++ev.orbit_stab_chi;
  auto facs = ff::prime_factors(ev.orbit_stab_chi);
  if (facs.empty()) {  // trivial stabilizer: any prime coprime to m works
    ev.e_holds = ev.precondition_ok && ev.multiplicity != 0;
  } else if (facs.size() == 1) {
    ev.e_holds = ev.precondition_ok && ev.multiplicity % facs[0] != 0;
  } else {
    ev.e_holds = false;
  }
  return ev;
}

CriterionCContext make_criterion_c_context(const McKayContext& ctx) {
  CriterionCContext cc;
  auto maps = grp::make_automorphisms(ctx.X->G);
  int n = ctx.X->G.F().n();
  grp::Group Sigma = grp::semidirect_by_automorphism(ctx.X->G, maps.alpha, n);
  cc.Sigma = ctab::GroupData::make(std::move(Sigma));
  cc.TSigma = ctab::character_table(cc.Sigma);
  // U embeds with trivial twist
  std::vector<grp::GroupElement> uelems = ctx.U->G.elems;
  grp::Group Uin = grp::subgroup_from_elements(cc.Sigma->G, std::move(uelems));
  cc.Delta = ctab::GroupData::make(grp::normalizer(cc.Sigma->G, Uin));
  cc.TDelta = ctab::character_table(cc.Delta);
  cc.CDeltaX = ctab::GroupData::make(
      grp::centralizer_of_group(cc.Delta->G, ctx.X->G));
  return cc;
}

std::optional<bool> criteria_c_partial(const McKayContext& ctx,
                                       const CriterionCContext& cc, int xrow,
                                       int urow) {
  auto chi_ext = ctab::extensions(cc.TSigma, ctx.X, ctx.TX->row(xrow));
  auto mu_ext = ctab::extensions(cc.TDelta, ctx.U, ctx.TU.row(urow));
  if (chi_ext.empty() || mu_ext.empty()) return std::nullopt;  // undecided here
  for (int ce : chi_ext) {
    ctab::ClassFunction cr = ctab::restrict_to(cc.TSigma.row(ce), cc.CDeltaX);
    for (int me : mu_ext) {
      ctab::ClassFunction mr = ctab::restrict_to(cc.TDelta.row(me), cc.CDeltaX);
      if (ctab::inner_product(cr, mr) != 0) return true;
    }
  }
  return false;
}

}  // namespace verify
