#pragma once

#include <string>

namespace colombeau {

/// Tunable thresholds shared by the numeric (sampled) routines. Loaded from a
/// line-oriented `key=value` file; unknown keys are rejected.
struct Config {
  int k_min = 2;                  // grid ε_k = 2^-k starts here
  int k_max = 48;
  double m_max = 25.0;            // heuristic negligibility: estimated ν ≥ m_max
  double moderate_max = 50.0;     // heuristic moderateness: estimated ν > -moderate_max
  int slope_window = 16;          // tail points used by the slope fit
  double quad_tol = 1e-12;        // relative quadrature tolerance
  int m_mesh = 8;                 // graph mesh width ε^m_mesh
  int n_max = 20;                 // saturation chain depth
  unsigned precision_bits = 2048; // MPFR working precision for samples
  unsigned long seed = 20240601;

  /// Throws Error(invalid_argument) when an invariant is broken.
  void validate() const;

  void set(const std::string& key, const std::string& value);
  static Config from_file(const std::string& path);
};

}  // namespace colombeau
