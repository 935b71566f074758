#pragma once

#include "osp/pvcrystal.hpp"
#include "osp/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace osp::io {

// insertion-ordered so that serialization follows the PBW order of the roots
using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s);  // {"num": [[exp, coeff], ...], "den": [...]}
Scalar scalar_from_json(const json& j);

json weight_to_json(const Weight& w);

// {"c": {"i,j": v, ...}} with the nonzero entries in PBW order
json rad_to_json(const RadCrystal& C, const RadArray& x);
RadArray rad_from_json(const RadCrystal& C, const json& j);

json tableau_to_json(const HookTableau& t);
HookTableau tableau_from_json(int m, int n, const json& j);

// {"c": {...}, "tableau": [[...], ...]}
json pv_to_json(const PVCrystal& P, const PVElement& b);
PVElement pv_from_json(const PVCrystal& P, const json& j);

json roots_to_json(const RootSystem& rs);
json report_to_json(const Report& r);

json graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const json& j);

std::vector<int> parse_int_list(const std::string& s);  // "5,3,3" -> {5, 3, 3}

}  // namespace osp::io
