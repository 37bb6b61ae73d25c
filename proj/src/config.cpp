#include "colombeau/config.hpp"

#include <fstream>
#include <sstream>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Config::validate() const {
  if (k_min < 1) throw Error(ErrorCode::invalid_argument, "k_min must be >= 1");
  if (k_max - k_min < 8) throw Error(ErrorCode::invalid_argument, "k_max - k_min must be >= 8");
  if (slope_window < 2 || slope_window > k_max - k_min + 1)
    throw Error(ErrorCode::invalid_argument, "slope_window must fit inside the grid");
  if (!(m_max > 0) || !(moderate_max > 0) || !(quad_tol > 0))
    throw Error(ErrorCode::invalid_argument, "thresholds and tolerances must be positive");
  if (m_mesh < 1 || n_max < 1) throw Error(ErrorCode::invalid_argument, "m_mesh and n_max must be >= 1");
  if (precision_bits < 64) throw Error(ErrorCode::invalid_argument, "precision_bits must be >= 64");
}

void Config::set(const std::string& key, const std::string& value) {
  try {
    if (key == "k_min") k_min = std::stoi(value);
    else if (key == "k_max") k_max = std::stoi(value);
    else if (key == "m_max") m_max = std::stod(value);
    else if (key == "moderate_max") moderate_max = std::stod(value);
    else if (key == "slope_window") slope_window = std::stoi(value);
    else if (key == "quad_tol") quad_tol = std::stod(value);
    else if (key == "m_mesh") m_mesh = std::stoi(value);
    else if (key == "n_max") n_max = std::stoi(value);
    else if (key == "precision_bits") precision_bits = static_cast<unsigned>(std::stoul(value));
    else if (key == "seed") seed = std::stoul(value);
    else throw Error(ErrorCode::invalid_argument, "unknown config key '" + key + "'");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::invalid_argument, "bad value for config key '" + key + "': " + value);
  }
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open config file " + path);
  Config cfg;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::syntax, "config line without '=': " + line);
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

}  // namespace colombeau
