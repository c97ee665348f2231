#pragma once

// Exact irreducible character tables via the class-matrix congruence method,
// class functions with restriction / induction / inner products, and the
// value-anchored labelings used to name rows (Psi, chi_i, theta_j, xi, eta,
// mu_j, lambda_t, Pi, Gamma, Omega_s, Theta_l, Lambda_l, rho_i).
//
// Tables are computed over a prime field F_r with r = 1 mod exp(G) and
// r > 2|G|, where the class matrices split into common eigenvectors; the
// eigenvector data lifts uniquely to exact cyclotomic character values
// through the power maps.  Row order is deterministic: by degree, then
// lexicographically by the serialized values.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyc.hpp"
#include "grp.hpp"

namespace ctab {

struct GroupMismatch : std::runtime_error {
  GroupMismatch() : std::runtime_error("class functions on different groups") {}
};
struct LiftFailure : std::logic_error {
  explicit LiftFailure(const std::string& w) : std::logic_error("lift failure: " + w) {}
};
struct LabelingFailure : std::runtime_error {
  explicit LabelingFailure(const std::string& w)
      : std::runtime_error("labeling failure: " + w) {}
};
struct NotNormal : std::runtime_error {
  NotNormal() : std::runtime_error("subgroup is not normal") {}
};

// A group together with its conjugacy-class data, heap-pinned so class
// functions can hold stable pointers.
struct GroupData {
  grp::Group G;
  grp::ConjugacyClasses C;
  std::int64_t exponent = 1;
  int identity_class = 0;

  static std::shared_ptr<GroupData> make(grp::Group g);
};
using GroupDataPtr = std::shared_ptr<GroupData>;

struct ClassFunction {
  GroupDataPtr gd;
  std::vector<cyc::Cyc> values;  // one per class, class-index order
};

struct CharacterTable {
  GroupDataPtr gd;
  std::vector<std::vector<cyc::Cyc>> rows;
  std::vector<std::int64_t> degrees;

  int count() const { return (int)rows.size(); }
  ClassFunction row(int i) const { return {gd, rows[i]}; }
  int find_row(const std::vector<cyc::Cyc>& values) const;  // -1 if absent
};

CharacterTable character_table(GroupDataPtr gd);

// closed-form dicyclic table from the defining relations, classes aligned
// with the computed class data of make_dicyclic(n)
CharacterTable dicyclic_table_formulas(int n);

cyc::Cyc inner_product_cyc(const ClassFunction& f, const ClassFunction& g);
cyc::Rat inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction restrict_to(const ClassFunction& chi, const GroupDataPtr& U);
ClassFunction induce_from(const ClassFunction& mu, const GroupDataPtr& X);

struct CharacterPredicates {
  bool is_real = false;
  bool is_rational = false;
  std::vector<int> kernel_classes;
  std::vector<cyc::Cyc> central_character;  // chi(z)/chi(1) on central classes
  std::int64_t degree = 0;
};
CharacterPredicates character_predicates(const ClassFunction& chi);

std::vector<int> l_prime_subset(const CharacterTable& T, std::int64_t ell);

// all rows of TSigma restricting to chi on the normal subgroup X
std::vector<int> extensions(const CharacterTable& TSigma, const GroupDataPtr& X,
                            const ClassFunction& chi);

enum class Family { Sl2Odd, Sl2Even, Sz, Dicyclic, Dihedral, SzSylow };

struct Labeling {
  std::map<std::string, int> row_of;
  std::vector<std::string> name_of;  // per row, "" when unlabeled

  int at(const std::string& name) const;
  bool has(const std::string& name) const { return row_of.count(name) > 0; }
};

// Value-anchored labeling.  Anchor elements come from the group's named
// anchors: "a"/"b" for SL2, "x"/"u" for dicyclic and dihedral tori,
// "x"/"y"/"z" for Sz(8).  Unordered pairs (xi, eta, mu+-, Gamma, rho) are
// resolved by the numeric tie-break (larger real part, then larger
// imaginary part) at the pinned anchor class (mu+-) or at the first class
// where the pair differs.
Labeling label_characters(const CharacterTable& T, Family family);

}  // namespace ctab
