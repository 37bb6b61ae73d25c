#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "colombeau/gen_number.hpp"

namespace colombeau {

namespace quad {

/// Gauss–Legendre of order 64 on every panel [breaks[i], breaks[i+1]], each split
/// into `subdivisions` equal pieces. Summation order is fixed.
std::vector<double> gauss_legendre(const std::function<void(double, std::span<double>)>& f,
                                   std::size_t components, const std::vector<double>& breaks,
                                   int subdivisions);
double gauss_legendre(const std::function<double(double)>& f, const std::vector<double>& breaks,
                      int subdivisions);

struct SimpsonResult {
  std::vector<double> value;
  std::vector<double> error;  // summed |S2 - S1| / 15 per component
};

/// Adaptive Simpson with Richardson correction on each panel. The absolute
/// tolerance `tol` is shared evenly between panels; QuadratureFailure when a
/// panel does not settle within `max_depth` bisections.
SimpsonResult adaptive_simpson(const std::function<void(double, std::span<double>)>& f,
                               std::size_t components, const std::vector<double>& breaks,
                               double tol, int max_depth = 40);

}  // namespace quad

/// ψ₀(x) = C·exp(-1/(1-x²)) on (-1,1), zero elsewhere, with ∫ψ₀ = 1.
struct BumpBase {
  double C = 0;
  double simpson_integral = 0;  // ∫exp(-1/(1-x²)) by adaptive Simpson
  double gauss_integral = 0;    // same by panelized Gauss–Legendre

  double operator()(double x) const;
  /// j-th derivative from the closed-form recurrence ψ₀^{(j)} = ψ₀·Q_j/(1-x²)^{2j}.
  double derivative(int j, double x) const;
};

/// C from adaptive Simpson to relative tolerance `cfg.quad_tol`, cross-checked
/// against Gauss–Legendre. QuadratureFailure when the two disagree.
BumpBase build_base(const Config& cfg = default_config());

struct LiftCoefficients {
  double a;
  double b;
};

/// a = -η^n/(1-η^n), b = 1/(η-η^{n+1}).
LiftCoefficients lift_coefficients(int n, double eta);

struct Level {
  int n;
  double eta;
  double a;
  double b;
  double delta;  // budget δ_n the level was built for
  double l1;     // measured ∫|φ_n|
};

/// φ_n(x) = a_n φ_{n-1}(x) + b_n φ_{n-1}(x/η_n), φ_0 = ψ₀. Immutable; the
/// scale-indexed expansion φ_n(x) = Σ c_s ψ₀(x/s) is kept alongside the levels.
class MollifierTree {
 public:
  struct Term {
    double scale;
    double coeff;
  };

  explicit MollifierTree(BumpBase base);

  int order() const { return static_cast<int>(levels_.size()); }
  const BumpBase& base() const { return base_; }
  const std::vector<Level>& levels() const { return levels_; }
  /// Terms sorted by decreasing scale; scales are powers of 2.
  const std::vector<Term>& terms() const { return terms_; }

  /// Tree truncated to its first n levels.
  MollifierTree prefix(int n) const;
  MollifierTree lifted(const Level& level) const;

  /// Recursive evaluation over the 2^N leaves.
  double eval(double x) const;
  /// Same value from the scale-indexed expansion.
  double eval_flat(double x) const;
  /// φ_N^{(j)} by the chain rule on the tree (recursive).
  double derivative(int j, double x) const;
  double derivative_flat(int j, double x) const;

  /// Panel breakpoints: 0, ±scales.
  std::vector<double> breakpoints() const;

 private:
  double eval_rec(int level, double x) const;
  double deriv_rec(int level, int j, double x) const;

  BumpBase base_;
  std::vector<Level> levels_;
  std::vector<Term> terms_;
};

struct MomentRow {
  int k;
  double moment;     // adaptive Simpson
  double gauss;      // Gauss–Legendre
  double error;      // |moment - gauss| + Simpson error estimate
};

struct MomentReport {
  std::vector<MomentRow> rows;  // k = 0..k_max
  double l1 = 0;                // ∫|φ| by adaptive Simpson
  double l1_gauss = 0;
  double l1_error = 0;

  /// Largest |moment k| over 1 ≤ k ≤ k_hi.
  double max_moment(int k_hi) const;
  /// Largest |Simpson - Gauss| over the moments.
  double max_disagreement() const;
};

MomentReport moment_report(const MollifierTree& tree, int k_max, const Config& cfg = default_config());
void write_moments_csv(const MomentReport& report, const std::string& path);

/// Tolerance for "moment vanishes" and "∫φ = 1".
double moment_tolerance(const Config& cfg);

/// Adds level n = order()+1 with the largest η = 2^-j meeting
/// (1+η^n)/(1-η^n)·(1+δ/2) ≤ 1+δ, then verifies mass, moments and L¹ by
/// quadrature. PreconditionMomentFailure when the input tree does not qualify.
MollifierTree lift_order(const MollifierTree& tree, double delta_target,
                         const Config& cfg = default_config());

/// Budgets δ_n = δ·2^{n-N}. N ≤ 12.
MollifierTree build_vanishing(int N, double delta, const Config& cfg = default_config());
MollifierTree build_vanishing(const BumpBase& base, int N, double delta,
                              const Config& cfg = default_config());

struct DiagonalRow {
  int n;
  double M;           // p_n(φ_n)
  int M_order;        // highest derivative order that stayed finite
  double eps;         // ε_n
  double l1;          // ∫|φ_n|
  double max_moment;  // max_{1≤k≤n} |∫x^k φ_n|
  double mass;        // ∫φ_n
};

/// ψ_ε = φ_n for ε ∈ (ε_{n+1}, ε_n]; φ_0 above ε_0.
struct DiagonalTable {
  std::vector<DiagonalRow> rows;
  bool decreasing = false;
  bool overflow = false;    // some M_n was reported at reduced order
  bool moments_ok = false;  // every grid or threshold ε ≤ ε_m has moment m ≤ tol

  int level_at(double eps) const;
};

/// M_n = max_{j≤n} sup_{|x|≤1} |φ_n^{(j)}|, sampled on a per-scale mesh; ε_0 =
/// min(1/2, 1/M_0), ε_n = min(ε_{n-1}/2, 1/M_n). φ_n is the n-level prefix of `tree`.
DiagonalTable assemble_generalized(const MollifierTree& tree, const Config& cfg = default_config());

/// p_n(φ) with the derivative order capped by overflow; returns {value, order reached}.
std::pair<double, int> seminorm(const MollifierTree& tree, int n);

void write_samples_csv(const MollifierTree& tree, const std::string& path, int points = 4001);
void write_schedule_csv(const MollifierTree& tree, const DiagonalTable& table, const std::string& path);
void write_diagonal_csv(const DiagonalTable& table, const Config& cfg, const std::string& path);

/// ψ_d(x) = Π φ(x_i √d)·(√d)^d.
class TensorMollifier {
 public:
  TensorMollifier(MollifierTree tree, int d);

  int dim() const { return d_; }
  const MollifierTree& factor() const { return tree_; }
  double operator()(std::span<const double> x) const;
  /// ∫x^β ψ_d = Π d^{-β_i/2} m_{β_i}, with m the 1-d moments.
  double moment(std::span<const int> beta, const std::vector<double>& moments_1d) const;

 private:
  MollifierTree tree_;
  int d_;
  double s_;
};

TensorMollifier tensorize(const MollifierTree& tree, int d);

}  // namespace colombeau
