#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colombeau/power_sum.hpp"

namespace colombeau {

/// Geometric comb: ε ∈ ⋃_{k≥0, k≡r (mod m)} (c·q^{k+1}, c·q^k].
struct CombPattern {
  double c = 0.5;
  double q = 0.5;
  int m = 1;
  int r = 0;

  /// Membership in terms of λ = ln ε.
  bool contains_log(double lambda) const;
  bool operator==(const CombPattern&) const = default;
  std::string to_string() const;
};

/// Conjunction of combs; the empty list is the whole of (0,1).
using Region = std::vector<CombPattern>;

std::string region_to_string(const Region& region);

struct Piece {
  Region region;
  PowerSum value;
};

/// Activity of an ordered, first-match list of regions, found by scanning every
/// comb boundary over a window in λ = ln ε wide enough to cover each comb's
/// period many times. `recurring` pieces are active arbitrarily close to 0.
struct RegionScan {
  std::vector<bool> active;
  std::vector<bool> recurring;
  /// Some scanned point with two or more regions active at once (first two indices).
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  /// Some scanned point near 0 where no region is active.
  bool gap_near_zero = false;
};

RegionScan scan_regions(const std::vector<Region>& regions);

/// Symbolic net ε ↦ x_ε: ordered pieces, first matching region wins, the last
/// piece has the empty region (tail).
class PiecewiseNet {
 public:
  PiecewiseNet();
  explicit PiecewiseNet(PowerSum value);
  /// Pieces may come in any order; the single tail piece is moved last. Comb
  /// pieces must be pairwise disjoint near 0 (OverlapError otherwise).
  static PiecewiseNet from_pieces(std::vector<Piece> pieces);

  /// Pieces taken as an ordered first-match list ending in a tail; no overlap check.
  static PiecewiseNet from_ordered(std::vector<Piece> pieces);

  static PiecewiseNet constant(double c) { return PiecewiseNet(PowerSum::constant(c)); }
  static PiecewiseNet alpha() { return PiecewiseNet(PowerSum::alpha()); }
  static PiecewiseNet monomial(double coeff, double expo) {
    return PiecewiseNet(PowerSum::monomial(coeff, expo));
  }
  static PiecewiseNet negligible(NeglSign sign = NeglSign::positive) {
    return PiecewiseNet(PowerSum::negligible(sign));
  }

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<bool>& recurring() const { return recurring_; }

  const PowerSum& piece_at_log(double lambda) const;
  Real eval(const Real& eps) const;

  /// Exact valuation: min over recurring pieces.
  double valuation() const;
  bool is_negligible() const;
  /// Common eventual sign of all recurring pieces, if they agree.
  std::optional<int> eventual_sign() const;
  /// True when every recurring piece is eventually ≥ 0.
  bool eventually_nonneg() const;
  bool is_single() const { return pieces_.size() == 1; }

  std::string to_string() const;

  /// Combines any number of nets piece by piece over their common refinement.
  static PiecewiseNet combine(std::span<const PiecewiseNet* const> nets,
                              const std::function<PowerSum(std::span<const PowerSum* const>)>& f);

 private:
  explicit PiecewiseNet(std::vector<Piece> pieces, bool);
  void finalize();

  std::vector<Piece> pieces_;
  std::vector<bool> recurring_;
};

PiecewiseNet operator+(const PiecewiseNet& a, const PiecewiseNet& b);
PiecewiseNet operator-(const PiecewiseNet& a, const PiecewiseNet& b);
PiecewiseNet operator*(const PiecewiseNet& a, const PiecewiseNet& b);
PiecewiseNet operator-(const PiecewiseNet& a);
PiecewiseNet scale(const PiecewiseNet& a, double factor);
PiecewiseNet abs(const PiecewiseNet& a);
/// Per refined piece: `if_ge` where key_a − key_b is eventually ≥ 0, else `if_lt`.
/// A difference whose sign cannot be resolved (negligible of unknown sign) takes `if_ge`.
PiecewiseNet select_ge(const PiecewiseNet& key_a, const PiecewiseNet& key_b,
                       const PiecewiseNet& if_ge, const PiecewiseNet& if_lt);
PiecewiseNet max(const PiecewiseNet& a, const PiecewiseNet& b);
PiecewiseNet min(const PiecewiseNet& a, const PiecewiseNet& b);

/// χ_S for S the union of the given (pairwise disjoint) combs.
PiecewiseNet indicator(const std::vector<CombPattern>& set);
/// χ of the complement of the union.
PiecewiseNet indicator_complement(const std::vector<CombPattern>& set);

/// e_{S_1} v_1 + ... with the last entry taken on the remaining ε.
PiecewiseNet splice(const std::vector<std::pair<Region, PiecewiseNet>>& parts);

}  // namespace colombeau
