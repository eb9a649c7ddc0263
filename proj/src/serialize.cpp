#include "polyconj/serialize.hpp"

#include "polyconj/error.hpp"

namespace polyconj {

json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::Parse, "expected an exact rational, got " + j.dump());
}

json to_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

RatPoly poly_from_json(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected a coefficient list, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RatPoly(c);
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::Parse, "expected [re, im], got " + j.dump());
}

json to_json(const std::vector<Complex>& zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(to_json(z));
  return a;
}

std::vector<Complex> complex_list_from_json(const json& j) {
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json roots_json(const std::vector<NumericRoot>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back({{"z", to_json(r.z)}, {"residual", r.residual}, {"radius", r.radius}});
  return a;
}

json to_json(const fields::ChargeConfig& cfg) {
  json pos = json::array();
  for (const auto& p : cfg.positions) pos.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  return {{"positions", pos}, {"charges", cfg.charges}};
}

fields::ChargeConfig charge_config_from_json(const json& j) {
  try {
    fields::ChargeConfig cfg;
    for (const auto& p : j.at("positions")) {
      auto v = p.get<std::vector<double>>();
      cfg.positions.push_back(Eigen::Map<const fields::Vec>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    cfg.charges = j.at("charges").get<std::vector<double>>();
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("charge config: ") + e.what());
  }
}

json to_json(const fields::EquilibriumOptions& o) {
  return {{"exponent", o.exponent},         {"grid_per_axis", o.grid_per_axis}, {"random_starts", o.random_starts},
          {"dedupe_radius", o.dedupe_radius}, {"tolerance", o.tolerance},       {"max_iterations", o.max_iterations},
          {"seed", o.seed}};
}

fields::EquilibriumOptions equilibrium_options_from_json(const json& j) {
  fields::EquilibriumOptions o;
  o.exponent = j.value("exponent", o.exponent);
  o.grid_per_axis = j.value("grid_per_axis", o.grid_per_axis);
  o.random_starts = j.value("random_starts", o.random_starts);
  o.dedupe_radius = j.value("dedupe_radius", o.dedupe_radius);
  o.tolerance = j.value("tolerance", o.tolerance);
  o.max_iterations = j.value("max_iterations", o.max_iterations);
  o.seed = j.value("seed", o.seed);
  return o;
}

json to_json(const fields::PsiConfig& cfg) {
  json pts = json::array();
  for (int i = 0; i < cfg.size(); ++i) {
    auto u = static_cast<std::size_t>(i);
    pts.push_back({cfg.xs[u], cfg.ys[u]});
  }
  return {{"points", pts}, {"charges", cfg.charges}, {"alpha", cfg.alpha}};
}

fields::PsiConfig psi_config_from_json(const json& j) {
  try {
    fields::PsiConfig cfg;
    for (const auto& p : j.at("points")) {
      cfg.xs.push_back(p.at(0).get<double>());
      cfg.ys.push_back(p.at(1).get<double>());
    }
    cfg.charges = j.at("charges").get<std::vector<double>>();
    cfg.alpha = j.value("alpha", 1.0);
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("psi config: ") + e.what());
  }
}

}  // namespace polyconj
