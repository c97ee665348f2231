#pragma once

// Enumerated finite matrix groups and semidirect products by an automorphism.
//
// Elements are d x d matrices of field-element indices, optionally paired
// with a twist exponent (g, i) multiplying by the rule
// (g, i)(h, j) = (g * phi^i(h), i + j mod m).  Every element packs into a
// 64-bit key (entries as base-q digits, twist appended); the key order is
// the canonical element order behind every "enumeration-least" tie-break.
//
// Groups are fully enumerated (BFS over sorted generators, capped around
// 1.5e5 elements), so conjugacy classes, normalizers and Sylow subgroups
// are computed by direct orbit and membership tests.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ff.hpp"

namespace grp {

struct CapExceeded : std::runtime_error {
  CapExceeded() : std::runtime_error("group closure exceeded its cap") {}
};
struct NotSubgroup : std::runtime_error {
  NotSubgroup() : std::runtime_error("not a subgroup of the ambient group") {}
};
struct PrimeDoesNotDivide : std::runtime_error {
  PrimeDoesNotDivide() : std::runtime_error("prime does not divide group order") {}
};
struct NoSuchPrime : std::runtime_error {
  NoSuchPrime() : std::runtime_error("prime divides neither q-1 nor q+1") {}
};
struct NotIntravariant : std::runtime_error {
  NotIntravariant() : std::runtime_error("no inner correction fixes the subgroup") {}
};
struct OrderMismatch : std::runtime_error {
  OrderMismatch() : std::runtime_error("automorphism power is not the identity") {}
};
struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& w) : std::runtime_error(w) {}
};

struct Mat {
  int d = 0;
  std::array<std::int32_t, 16> e{};  // row-major, entries are field indices

  std::int32_t& at(int i, int j) { return e[i * d + j]; }
  std::int32_t at(int i, int j) const { return e[i * d + j]; }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.d == b.d && a.e == b.e;
  }
};

Mat mat_identity(int d);
Mat mat_mul(const ff::FiniteField& F, const Mat& a, const Mat& b);
Mat mat_inverse(const ff::FiniteField& F, const Mat& a);  // Gaussian elimination

struct GroupElement {
  Mat m;
  std::int32_t tw = 0;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.tw == b.tw && a.m == b.m;
  }
};

// Automorphisms as explicit rules: entrywise Frobenius powers, conjugation
// by a fixed (possibly non-members) matrix, and compositions of those.
class AutomorphismMap {
 public:
  static AutomorphismMap identity();
  static AutomorphismMap frobenius(int k);  // entrywise ^(p^k)
  static AutomorphismMap conjugation_by(const ff::FiniteField& F, const Mat& t);

  AutomorphismMap then(const AutomorphismMap& next) const;
  AutomorphismMap inverse() const;
  bool is_identity_rule() const { return steps_.empty(); }

  Mat apply(const ff::FiniteField& F, const Mat& x) const;
  GroupElement apply(const ff::FiniteField& F, const GroupElement& x) const;

 private:
  struct Step {
    int frob_k = 0;      // used when conj == false
    bool conj = false;
    Mat t, t_inv;
  };
  std::vector<Step> steps_;
};

class Group {
 public:
  ff::FieldPtr field;
  int dim = 0;
  int twist_mod = 1;
  std::vector<AutomorphismMap> twist_pow;  // phi^0..phi^{m-1}; empty when m = 1
  std::vector<GroupElement> elems;         // fixed enumeration order
  std::vector<std::int32_t> gens;          // positions of generators
  std::map<std::string, std::int32_t> anchors;  // designated elements by name

  const ff::FiniteField& F() const { return *field; }
  std::int64_t order() const { return (std::int64_t)elems.size(); }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, std::int64_t e) const;
  std::int64_t element_order(const GroupElement& a) const;

  std::uint64_t key(const GroupElement& a) const;
  std::int32_t index_of(const GroupElement& a) const;  // -1 if absent
  bool contains(const GroupElement& a) const { return index_of(a) >= 0; }
  bool contains_group(const Group& S) const;
  bool same_element_set(const Group& other) const;

  GroupElement anchor(const std::string& name) const;
  std::int64_t exponent() const;

 private:
  std::unordered_map<std::uint64_t, std::int32_t> pos_;
  friend Group generate(ff::FieldPtr, int, int, const AutomorphismMap&,
                        std::vector<GroupElement>, std::int64_t);
  friend Group subgroup_from_elements(const Group&, std::vector<GroupElement>);
};

// BFS closure; enumeration order is BFS order with the generator list sorted
// by canonical key.  Throws CapExceeded when the closure passes cap.
Group generate(ff::FieldPtr field, int dim, int twist_mod,
               const AutomorphismMap& twist, std::vector<GroupElement> gens,
               std::int64_t cap);

// same ambient data, elements sorted by key, generators re-derived greedily
Group subgroup_from_elements(const Group& G, std::vector<GroupElement> elems);

struct ConjugacyClasses {
  const Group* G = nullptr;
  std::vector<std::int32_t> rep;                  // key-least element of class
  std::vector<std::int64_t> size;
  std::vector<std::int64_t> rep_order;
  std::vector<std::int32_t> class_of;             // per element position
  std::vector<std::vector<std::int32_t>> members; // positions, ascending key
  std::vector<std::int32_t> inverse_class;

  int count() const { return (int)rep.size(); }
  // class of rep(c)^t, t arbitrary integer
  std::int32_t power_class(std::int32_t c, std::int64_t t) const;
};

ConjugacyClasses conjugacy_classes(const Group& G);

Group normalizer(const Group& G, const Group& S);
Group centralizer_of_group(const Group& G, const Group& S);
Group center(const Group& G);
Group sylow(const Group& G, std::int64_t ell);

struct TorusData {
  Group T, L, U;
  GroupElement torus_gen;
  bool split = false;
};

// split torus normalizer for ell | q-1, non-split for ell | q+1
TorusData torus_normalizer(const Group& X, std::int64_t ell);

Group make_sl2(std::int64_t q);
Group make_sz(std::int64_t q);
Group make_dicyclic(int n);   // order 4n, degree n >= 2
Group make_dihedral(int m);   // order 2m

struct Sl2Automorphisms {
  AutomorphismMap alpha;                  // entrywise Frobenius
  std::optional<AutomorphismMap> tau;     // diagonal; absent for even q
};
Sl2Automorphisms make_automorphisms(const Group& X);

// phi composed with the least inner correction making it fix U setwise
AutomorphismMap stabilize_on_subgroup(const AutomorphismMap& phi, const Group& U,
                                      const Group& X);

Group semidirect_by_automorphism(const Group& G, const AutomorphismMap& phi,
                                 int m);

// bijectivity plus product preservation (exhaustive pairs for |G| <= 4096,
// a fixed deterministic sample above that)
bool is_automorphism(const Group& G, const AutomorphismMap& phi);

std::int64_t ell_part(std::int64_t n, std::int64_t ell);

}  // namespace grp
