#include "hc1d/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hc1d/errors.hpp"

namespace hc1d {

using nlohmann::json;

namespace {

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

std::vector<double> get_number_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(path, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

CoefficientProfile parse_profile(const json& j, const std::string& path, double lo, double hi) {
  if (!j.is_object()) throw ParseError(path, "expected an object with a 'kind' entry");
  if (!j.contains("kind")) throw ParseError(path + ".kind", "missing");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "constant") {
      if (!j.contains("value")) throw ParseError(path + ".value", "missing");
      return CoefficientProfile::constant(get_number(j.at("value"), path + ".value"), lo, hi);
    }
    if (kind == "piecewise-constant") {
      if (!j.contains("breakpoints")) throw ParseError(path + ".breakpoints", "missing");
      if (!j.contains("values")) throw ParseError(path + ".values", "missing");
      return CoefficientProfile::piecewise_constant(
          get_number_array(j.at("breakpoints"), path + ".breakpoints"),
          get_number_array(j.at("values"), path + ".values"));
    }
    if (kind == "sampled-grid") {
      if (!j.contains("samples")) throw ParseError(path + ".samples", "missing");
      return CoefficientProfile::sampled(get_number_array(j.at("samples"), path + ".samples"),
                                         lo, hi);
    }
  } catch (const ValidationError& e) {
    throw ValidationError(path, e.what());
  }
  throw ParseError(path + ".kind", "unknown kind '" + kind + "'");
}

json profile_to_json(const CoefficientProfile& p) {
  json j;
  switch (p.kind()) {
    case ProfileKind::Constant:
      j["kind"] = "constant";
      j["value"] = p.raw_values()[0];
      break;
    case ProfileKind::PiecewiseConstant:
      j["kind"] = "piecewise-constant";
      j["breakpoints"] = p.raw_breakpoints();
      j["values"] = p.raw_values();
      break;
    case ProfileKind::SampledGrid:
      j["kind"] = "sampled-grid";
      j["samples"] = p.raw_values();
      break;
  }
  return j;
}

}  // namespace

MediumSpec parse_medium(const std::string& config_text) {
  json root;
  try {
    root = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ParseError("<document>", e.what());
  }
  if (!root.is_object()) throw ParseError("<document>", "expected a JSON object");

  if (!root.contains("geometry") || !root.at("geometry").contains("h"))
    throw ParseError("geometry.h", "missing");
  const double h = get_number(root.at("geometry").at("h"), "geometry.h");
  if (!(h > 0.0) || !(h < 1.0))
    throw ValidationError("geometry.h", "h must lie strictly between 0 and 1");

  if (!root.contains("epsilon")) throw ParseError("epsilon", "missing");
  const double eps = get_number(root.at("epsilon"), "epsilon");

  if (!root.contains("coefficients")) throw ParseError("coefficients", "missing");
  const json& co = root.at("coefficients");
  for (const char* k : {"a0", "a1", "rho0", "rho1"})
    if (!co.contains(k)) throw ParseError(std::string("coefficients.") + k, "missing");

  MediumSpec spec{
      CellGeometry{h},
      parse_profile(co.at("a0"), "coefficients.a0", 0.0, h),
      parse_profile(co.at("a1"), "coefficients.a1", h, 1.0),
      parse_profile(co.at("rho0"), "coefficients.rho0", 0.0, h),
      parse_profile(co.at("rho1"), "coefficients.rho1", h, 1.0),
      std::nullopt,
      eps};

  if (root.contains("defect")) {
    const json& d = root.at("defect");
    for (const char* k : {"d_minus", "d_plus", "a_D", "rho_D"})
      if (!d.contains(k)) throw ParseError(std::string("defect.") + k, "missing");
    const double dm = get_number(d.at("d_minus"), "defect.d_minus");
    const double dp = get_number(d.at("d_plus"), "defect.d_plus");
    if (!(dm < dp)) throw ValidationError("defect", "d_minus must be smaller than d_plus");
    spec.defect = DefectSpec{dm, dp, parse_profile(d.at("a_D"), "defect.a_D", dm, dp),
                             parse_profile(d.at("rho_D"), "defect.rho_D", dm, dp)};
  }

  spec.validate();
  return spec;
}

MediumSpec load_medium(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string(), "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_medium(ss.str());
}

std::string serialize_medium(const MediumSpec& spec) {
  json root;
  root["geometry"]["h"] = spec.geometry.h;
  root["epsilon"] = spec.epsilon;
  root["coefficients"]["a0"] = profile_to_json(spec.a0);
  root["coefficients"]["a1"] = profile_to_json(spec.a1);
  root["coefficients"]["rho0"] = profile_to_json(spec.rho0);
  root["coefficients"]["rho1"] = profile_to_json(spec.rho1);
  if (spec.defect) {
    root["defect"]["d_minus"] = spec.defect->d_minus;
    root["defect"]["d_plus"] = spec.defect->d_plus;
    root["defect"]["a_D"] = profile_to_json(spec.defect->a);
    root["defect"]["rho_D"] = profile_to_json(spec.defect->rho);
  }
  return root.dump(2);
}

std::string apply_overrides(const std::string& config_text,
                            const std::map<std::string, std::string>& overrides) {
  json root = json::parse(config_text);
  for (const auto& [path, value] : overrides) {
    json::json_pointer ptr("/" + [&] {
      std::string p = path;
      for (auto& c : p)
        if (c == '.') c = '/';
      return p;
    }());
    json parsed;
    try {
      parsed = json::parse(value);
    } catch (const json::parse_error&) {
      parsed = value;  // plain string override
    }
    root[ptr] = parsed;
  }
  return root.dump(2);
}

}  // namespace hc1d
