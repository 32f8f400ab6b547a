#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "apmads/solver.hpp"

namespace apmads {

/// Flat `key = value` text, one pair per line, `#` starts a comment.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in);
KeyValues read_config_file(const std::string& path);

/// Keys accepted by apply_config (field names of SolverConfig / RhoParams /
/// PrecisionPolicy).
const std::vector<std::string>& config_keys();

/// Overwrites the named fields. `variant` is not applied here; callers pick
/// the variant first. Throws InvalidInput on
/// unknown keys or malformed values.
void apply_config(const KeyValues& values, SolverConfig& config);

}  // namespace apmads
