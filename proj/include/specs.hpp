#pragma once

// Group spec strings ("sl2:13", "sz:8", "dic:6", "dih:7", "sl2:8:aut") and
// a process-wide cache of constructed groups and character tables, so the
// expensive constructions run once per process.

#include <string>

#include "ctab.hpp"

namespace specs {

struct BadSpec : std::runtime_error {
  explicit BadSpec(const std::string& w) : std::runtime_error("bad group spec: " + w) {}
};

struct Parsed {
  std::string family;  // "sl2", "sz", "dic", "dih"
  std::int64_t param = 0;
  bool aut = false;  // ":aut" suffix (semidirect with the field automorphisms)
};

Parsed parse(const std::string& spec);

// cached; throws BadSpec / grp::Unsupported
ctab::GroupDataPtr group(const std::string& spec);
const ctab::CharacterTable& table(const std::string& spec);

// labeling family for a base spec (sl2/sz/dic/dih)
ctab::Family family_of(const std::string& spec);

}  // namespace specs
