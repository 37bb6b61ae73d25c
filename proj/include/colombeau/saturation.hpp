#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colombeau/isets.hpp"

namespace colombeau {

struct ChainEntry {
  int n;
  /// Bound exponent: every member satisfies |u| ≤ α^{-t}. Derived from the
  /// family when absent.
  std::optional<double> t;
  SetFamily family;
  /// Member to use instead of the min-norm pick, when it belongs to the family.
  std::optional<VecNet> pick = std::nullopt;
};

/// Decreasing chain A_1 ⊇ A_2 ⊇ ... with strictly increasing indices.
struct ChainSpec {
  std::vector<ChainEntry> entries;

  static ChainSpec generate(int n_max, const std::function<SetFamily(int)>& family,
                            std::optional<double> t = 0.0);
};

/// Lines `n t SET`; `t` may be `?` to derive the bound. `#` starts a comment.
ChainSpec parse_chain(std::string_view text);

/// Checks bounds (MissingBound), nonemptiness (EmptyEntry) and inclusions
/// (ChainNotDecreasing). Returns the resolved bound exponents.
std::vector<double> validate_chain(const ChainSpec& chain, const Config& cfg = default_config());

/// Diagonal splice v_ε = u_{n,ε} for ε_{n+1} < ε ≤ ε_n on the grid.
struct SpliceNet {
  struct Threshold {
    int n;
    int k;  // ε_n = 2^-k
  };
  std::vector<Threshold> thresholds;
  std::vector<VecNet> branches;  // u_n ∈ A_n, one per threshold
  VecNet witness;                // sampled

  /// Index of the branch used at grid point k.
  std::size_t branch_at(int k) const;
};

struct SaturationResult {
  SpliceNet splice;
  struct Membership {
    int n;
    bool contains;              // contains(A_n, witness)
    double distance_valuation;  // estimated ν of dist(witness, A_n)
    bool depth_ok;              // distance valuation ≥ n or distance zero on the tail
  };
  std::vector<Membership> membership;
  bool all_members = false;
  double witness_valuation = 0;  // estimated ν of |witness|
};

/// Builds a point of ⋂ A_n. Picks the min-norm member u_n ∈ A_n (or the entry's
/// own pick) and finds grid
/// thresholds below which d(u_n, A_k) ≤ ε^n for all k ≤ n and
/// |u_n| ≤ ε^{-t_1-1}. GridTooShallow when the thresholds run past k_max.
SaturationResult saturation_witness(const ChainSpec& chain, const Config& cfg = default_config());

struct Ball {
  int n;
  double r;
  GenNumber center;
};
using BallChain = std::vector<Ball>;

/// Lines `n r NET`.
BallChain parse_balls(std::string_view text);

struct NestedBallsResult {
  GenNumber witness;
  bool eventually_constant = false;
  /// Exact check: ν(u_m − a_n) ≥ −log r_n for every branch m ≥ n.
  bool branches_ok = false;
  /// (n, estimated ν(witness − a_n)).
  std::vector<std::pair<int, double>> grid_valuations;
  bool all_ok = false;
  std::optional<SaturationResult> saturation;
};

/// Point x with ⟦x − a_n⟧ ≤ r_n for all n, spliced from the centers. NotNested when ⟦a_{n+1} − a_n⟧ > r_n
/// or the radii grow while the centers move.
NestedBallsResult nested_balls_witness(const BallChain& chain, const Config& cfg = default_config());

/// V(u; s) = {x : |x − u| ≤ ε^s}.
SetFamily valuation_ball(const GenNumber& u, double s);

/// One term per line.
std::vector<GenNumber> parse_sequence(std::string_view text);

struct CauchyResult {
  GenNumber limit;
  /// j_n for r_n = 2^-n, n = 1..depth.
  std::vector<int> j;
  struct Row {
    int j;
    double valuation;  // estimated ν(u_j − limit)
    double sharp;      // e^{-valuation}
  };
  std::vector<Row> table;
  SaturationResult saturation;
};

/// Sharp limit of a Cauchy sequence through the chain V(u_{j_n}; n ln 2).
/// NotCauchy when the tail diameter stalls; SequenceTooShort when the sequence
/// ends before j_depth can be certified.
CauchyResult cauchy_limit(const std::vector<GenNumber>& seq, int depth = 30, const Config& cfg = default_config());

}  // namespace colombeau
