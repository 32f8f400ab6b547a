#include "apmads/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>

#include "apmads/errors.hpp"
#include "apmads/run_log.hpp"

namespace apmads {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw InvalidInput("config key '" + key + "' expects a boolean, got '" + v + "'");
}

using Setter = std::function<void(SolverConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  auto real = [](double SolverConfig::*field) {
    return [field](SolverConfig& c, const std::string& v) { c.*field = parse_double(v); };
  };
  static const std::map<std::string, Setter> table = {
      {"sigma_min", [](SolverConfig& c, const std::string& v) { c.rho.sigma_min = parse_double(v); }},
      {"sigma_max", [](SolverConfig& c, const std::string& v) { c.rho.sigma_max = parse_double(v); }},
      {"r0", [](SolverConfig& c, const std::string& v) { c.rho.r0 = parse_double(v); }},
      {"theta", [](SolverConfig& c, const std::string& v) { c.rho.theta = parse_double(v); }},
      {"beta_l", [](SolverConfig& c, const std::string& v) { c.policy.beta_l = parse_double(v); }},
      {"beta_u", [](SolverConfig& c, const std::string& v) { c.policy.beta_u = parse_double(v); }},
      {"dp_decrease_threshold",
       [](SolverConfig& c, const std::string& v) { c.policy.dp_decrease_threshold = parse_double(v); }},
      {"step", [](SolverConfig& c, const std::string& v) { c.policy.step = parse_double(v); }},
      {"search_enabled",
       [](SolverConfig& c, const std::string& v) { c.search_enabled = parse_bool("search_enabled", v); }},
      {"r_s", real(&SolverConfig::r_s)},
      {"tau", real(&SolverConfig::tau)},
      {"r_init", real(&SolverConfig::r_init)},
      {"delta_p0", real(&SolverConfig::delta_p0)},
      {"stop_delta_p", real(&SolverConfig::stop_delta_p)},
      {"stop_draws", real(&SolverConfig::stop_draws)},
      {"max_iterations",
       [](SolverConfig& c, const std::string& v) { c.max_iterations = std::stoull(v); }},
      {"seed", [](SolverConfig& c, const std::string& v) { c.seed = std::stoull(v); }},
      {"variant", [](SolverConfig&, const std::string&) {}},
  };
  return table;
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  return parse_key_values(in);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, setter] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_config(const KeyValues& values, SolverConfig& config) {
  for (const auto& [key, value] : values) {
    auto it = setters().find(key);
    if (it == setters().end()) throw InvalidInput("unknown config key '" + key + "'");
    try {
      it->second(config, value);
    } catch (const std::logic_error& e) {
      throw InvalidInput("config key '" + key + "': bad value '" + value + "'");
    }
  }
}

}  // namespace apmads
