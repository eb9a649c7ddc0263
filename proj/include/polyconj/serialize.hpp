#pragma once

#include <complex>
#include <json.hpp>
#include <vector>

#include "polyconj/fields.hpp"
#include "polyconj/numeric_roots.hpp"
#include "polyconj/ratpoly.hpp"

namespace polyconj {

using json = nlohmann::json;

/// Exact rationals travel as strings ("3/2") so JSON never rounds them.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
/// Ascending coefficient list of rational strings.
json to_json(const RatPoly& p);
/// Accepts a coefficient list (strings or integers) or a polynomial string.
RatPoly poly_from_json(const json& j);

json to_json(const Complex& z);  // [re, im]
Complex complex_from_json(const json& j);  // [re, im] or a bare number
json to_json(const std::vector<Complex>& zs);
std::vector<Complex> complex_list_from_json(const json& j);
json roots_json(const std::vector<NumericRoot>& roots);

json to_json(const fields::ChargeConfig& cfg);
/// {positions: [[..]], charges: [..]}; InvalidArgument on malformed input.
fields::ChargeConfig charge_config_from_json(const json& j);
json to_json(const fields::EquilibriumOptions& o);
fields::EquilibriumOptions equilibrium_options_from_json(const json& j);
json to_json(const fields::PsiConfig& cfg);
/// {points: [[x, y], ..], charges: [..], alpha}.
fields::PsiConfig psi_config_from_json(const json& j);

}  // namespace polyconj
