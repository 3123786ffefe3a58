#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "hc1d/medium.hpp"

namespace hc1d {

/// Parses the JSON problem description documented in the README.
///
/// Top-level keys: geometry.h, coefficients.{a0,a1,rho0,rho1}, optional
/// defect.{d_minus,d_plus,a_D,rho_D}, epsilon. Each coefficient entry is an
/// object {"kind": "constant"|"piecewise-constant"|"sampled-grid", ...}.
/// Throws ParseError for schema violations and ValidationError for invariant
/// violations; both name the offending field.
MediumSpec parse_medium(const std::string& config_text);

/// parse_medium applied to the contents of a file.
MediumSpec load_medium(const std::filesystem::path& file);

/// Serializes a spec back to its config text. parse(serialize(s)) == s.
std::string serialize_medium(const MediumSpec& spec);

/// Applies dotted-path overrides like {"epsilon": "0.05"} or
/// {"defect.d_plus": "1.25"} to raw config text before parsing.
std::string apply_overrides(const std::string& config_text,
                            const std::map<std::string, std::string>& overrides);

}  // namespace hc1d
