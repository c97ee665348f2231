#include <map>
#include <mutex>

#include "jsonio.hpp"
#include "specs.hpp"

namespace specs {

Parsed parse(const std::string& spec) {
  Parsed out;
  size_t c1 = spec.find(':');
  if (c1 == std::string::npos) throw BadSpec(spec);
  out.family = spec.substr(0, c1);
  size_t c2 = spec.find(':', c1 + 1);
  std::string num = spec.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                : c2 - c1 - 1);
  try {
    out.param = std::stoll(num);
  } catch (...) {
    throw BadSpec(spec);
  }
  if (c2 != std::string::npos) {
    if (spec.substr(c2 + 1) != "aut") throw BadSpec(spec);
    out.aut = true;
  }
  if (out.family != "sl2" && out.family != "sz" && out.family != "dic" &&
      out.family != "dih")
    throw BadSpec(spec);
  if (out.aut && out.family != "sl2") throw BadSpec(spec + " (:aut needs sl2)");
  return out;
}

namespace {

std::map<std::string, ctab::GroupDataPtr> g_groups;
std::map<std::string, ctab::CharacterTable> g_tables;
std::mutex g_mutex;

grp::Group build(const Parsed& p) {
  if (p.family == "sl2") {
    grp::Group X = grp::make_sl2(p.param);
    if (!p.aut) return X;
    auto [pp, n] = [&] {
      std::int64_t q = p.param, prime = 2;
      while (q % prime != 0) ++prime;
      int e = 0;
      while (q > 1) {
        q /= prime;
        ++e;
      }
      return std::pair<std::int64_t, int>{prime, e};
    }();
    (void)pp;
    auto maps = grp::make_automorphisms(X);
    return grp::semidirect_by_automorphism(X, maps.alpha, n);
  }
  if (p.family == "sz") return grp::make_sz(p.param);
  if (p.family == "dic") return grp::make_dicyclic((int)p.param);
  return grp::make_dihedral((int)p.param);
}

}  // namespace

ctab::GroupDataPtr group(const std::string& spec) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_groups.find(spec);
  if (it != g_groups.end()) return it->second;
  auto gd = ctab::GroupData::make(build(parse(spec)));
  g_groups.emplace(spec, gd);
  return gd;
}

const ctab::CharacterTable& table(const std::string& spec) {
  auto gd = group(spec);
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_tables.find(spec);
  if (it != g_tables.end()) return it->second;
  auto [pos, _] = g_tables.emplace(spec, ctab::character_table(gd));
  return pos->second;
}

ctab::Family family_of(const std::string& spec) {
  Parsed p = parse(spec);
  if (p.aut) throw BadSpec("no labeling for :aut specs");
  if (p.family == "sl2")
    return p.param % 2 == 1 ? ctab::Family::Sl2Odd : ctab::Family::Sl2Even;
  if (p.family == "sz") return ctab::Family::Sz;
  if (p.family == "dic") return ctab::Family::Dicyclic;
  return ctab::Family::Dihedral;
}

}  // namespace specs

namespace jsonio {

nlohmann::json cyc_json(const cyc::Cyc& z) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : z.coeffs()) {
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  return {{"N", z.modulus()}, {"coeffs", coeffs}};
}

nlohmann::json table_json(const std::string& spec, const ctab::CharacterTable& T,
                          const ctab::Labeling* L) {
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < T.gd->C.count(); ++c) {
    classes.push_back({{"rep_order", T.gd->C.rep_order[c]},
                       {"size", T.gd->C.size[c]}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (int i = 0; i < T.count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : T.rows[i]) row.push_back(cyc_json(v));
    chars.push_back(row);
  }
  nlohmann::json out = {{"group", spec}, {"classes", classes}, {"chars", chars}};
  if (L) {
    nlohmann::json labels = nlohmann::json::array();
    for (int i = 0; i < T.count(); ++i) labels.push_back(L->name_of[i]);
    out["labels"] = labels;
  }
  return out;
}

}  // namespace jsonio
