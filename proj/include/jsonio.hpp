#pragma once

// JSON serialization: cyclotomic numbers as {"N": modulus, "coeffs":
// [[num, den], ...]} with lowest-terms integers rendered as decimal
// strings, and character tables as {"group", "classes", "chars"}.

#include "ctab.hpp"
#include "json.hpp"

namespace jsonio {

nlohmann::json cyc_json(const cyc::Cyc& z);
nlohmann::json table_json(const std::string& spec, const ctab::CharacterTable& T,
                          const ctab::Labeling* L = nullptr);

}  // namespace jsonio
