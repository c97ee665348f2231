#pragma once

// The verification layer: Feit-conjecture checks, automorphism and Galois
// actions on character tables, the local-global bijections Omega with
// Gamma x H equivariance checks, joint stabilizers, and the sufficient-
// criteria evidence for the central order.
//
// Gamma is materialized as the closure of the induced row permutations of
// the normalized outer generators (tau for odd q, the field automorphism
// alpha) acting simultaneously on Irr(X) and Irr(U); inner automorphisms
// act trivially on both sides, so this closure is a faithful copy of
// Out(X) (asserted against the known order).  H acts through the quotient
// modulo N = lcm of the element orders of X and U.

#include <optional>

#include "ctab.hpp"
#include "numeric.hpp"

namespace verify {

struct NotClosed : std::runtime_error {
  explicit NotClosed(const std::string& w)
      : std::runtime_error("action does not permute the table rows: " + w) {}
};
struct NoConsistentAssignment : std::runtime_error {
  NoConsistentAssignment()
      : std::runtime_error("no pair assignment passes the equivariance check") {}
};

using Perm = std::vector<int>;  // row index -> row index

// row permutation of (chi^phi)(x) = chi(phi^{-1}(x)); validates phi
Perm aut_action(const ctab::CharacterTable& T, const grp::AutomorphismMap& phi);

// row permutation of chi^sigma = sigma applied entrywise; sigma.N must be a
// multiple of every element order of the group
Perm galois_action(const ctab::CharacterTable& T, const cyc::GaloisAutomorphism& s);

struct FeitEntry {
  int row = 0;
  std::int64_t conductor = 1;
  int witness_class = -1;  // class with rep order == conductor, -1 if none
  std::int64_t witness_order = 0;
  bool ok = false;
};

struct FeitReport {
  std::vector<FeitEntry> entries;
  bool all_ok = true;
};

FeitReport feit_check(const ctab::CharacterTable& T);

// the closure of the named outer generators acting on both tables
struct GammaElement {
  std::string word;  // e.g. "tau.alpha^2"
  Perm on_x, on_u;
};

struct GammaAction {
  std::vector<GammaElement> elements;  // element 0 is the identity
  int expected_order = 1;              // |Out(X)|, asserted at build time
};

// one (q, l) verification instance
struct McKayContext {
  std::int64_t q = 0, ell = 0;
  bool split = false;
  std::string x_spec;
  ctab::GroupDataPtr X;
  const ctab::CharacterTable* TX = nullptr;
  ctab::Labeling LX;
  ctab::GroupDataPtr U;
  ctab::CharacterTable TU;
  ctab::Labeling LU;
  std::vector<int> irr_x;  // l' rows of X
  std::vector<int> irr_u;  // l' rows of U
  GammaAction gamma;
  std::int64_t N = 1;  // joint exponent
  cyc::HSubgroup H;
  std::vector<Perm> h_on_x, h_on_u;  // per H member
};

// cached; builds X = SL2(q), the torus normalizer for l, tables,
// labelings, normalized outer generators and the H action
const McKayContext& mckay_context(std::int64_t q, std::int64_t ell);

struct OmegaBijection {
  std::vector<std::pair<int, int>> pairs;  // (row in X, row in U)
  std::vector<std::pair<std::string, std::string>> labels;
  bool pair_swap = false;      // xi/eta pair mapped against the tie-break order
  bool pair_ambiguous = false; // both assignments pass equivariance
  int image_of(int xrow) const;
};

// the theorem bijection for the context family; the xi/eta <-> mu+- pair
// assignment is resolved by the equivariance check itself
OmegaBijection build_omega(const McKayContext& ctx);

struct EquivarianceReport {
  bool counts_ok = false;     // |Irr_l'(X)| = |Irr(U)| = |Irr_l'(U)|
  bool equivariant = false;   // Omega(chi^(g,s)) = Omega(chi)^(g,s) throughout
  std::vector<std::string> failures;
  bool pass() const { return counts_ok && equivariant; }
};

EquivarianceReport check_equivariance(const McKayContext& ctx,
                                      const OmegaBijection& omega);

// all (gamma index, k) with chi^{gamma sigma_k} = chi, on either side
std::vector<std::pair<int, std::int64_t>> joint_stabilizer_x(const McKayContext& ctx,
                                                             int xrow);
std::vector<std::pair<int, std::int64_t>> joint_stabilizer_u(const McKayContext& ctx,
                                                             int urow);

// multiplicity_matrix[i][j] = <restrict(chi_i, U), mu_j>, exact integers
std::vector<std::vector<std::int64_t>> multiplicity_matrix(const McKayContext& ctx);

struct CriteriaEvidence {
  int chi_row = -1, mu_row = -1;
  bool precondition_ok = false;  // (Gamma x H)_chi = (Gamma x H)_mu
  std::int64_t multiplicity = 0;
  bool a_holds = false;  // multiplicity one
  bool chi_real = false, mu_real = false, central_match = false;
  std::int64_t out_stab_chi = 0;   // |Out(X)_chi|
  std::int64_t out_stab_mu = 0;    // |image of Gamma_mu in Out|
  bool b_holds = false;  // Out(X)_chi trivial and same central character
  bool d_holds = false;  // both real, central match, |Delta_mu/U| odd
  std::int64_t orbit_stab_chi = 0;  // |Out(X)_{chi^H}|
  bool e_holds = false;  // Out(X)_{chi^H} a p-group with p coprime to mult
};

CriteriaEvidence check_criteria(const McKayContext& ctx, int xrow, int urow);

// decidable fragment of criterion (c): some extensions chi* of chi to Sigma
// and mu* of mu to Delta = N_Sigma(U) agree over C_Delta(X)
struct CriterionCContext {
  ctab::GroupDataPtr Sigma;
  ctab::CharacterTable TSigma;
  ctab::GroupDataPtr Delta;
  ctab::CharacterTable TDelta;
  ctab::GroupDataPtr CDeltaX;  // centralizer of X in Delta
};
CriterionCContext make_criterion_c_context(const McKayContext& ctx);
std::optional<bool> criteria_c_partial(const McKayContext& ctx,
                                       const CriterionCContext& cc, int xrow,
                                       int urow);

}  // namespace verify
