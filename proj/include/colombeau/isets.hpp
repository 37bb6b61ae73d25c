#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colombeau/gen_number.hpp"

namespace colombeau {

struct Interval {
  GenNumber lo;
  GenNumber hi;
};

/// Product of d intervals.
struct Box {
  std::vector<Interval> sides;
};

/// Finite point list in R^d.
struct Points {
  std::vector<VecNet> pts;
};

/// {x : |x|_∞ ≥ r_ε}. r = 0 is the whole space.
struct Exterior {
  GenNumber r;
  std::size_t dim = 1;
};

using Shape = std::variant<Interval, Box, Points, Exterior>;

std::size_t shape_dim(const Shape& s);
std::string shape_to_string(const Shape& s);

/// ε-indexed subset of R^d given as a finite union of shapes; a representative
/// (A_ε)_ε of an internal set. No shapes means the empty family.
class SetFamily {
 public:
  explicit SetFamily(std::size_t dim = 1, std::string name = {});
  /// Validates each shape (InvalidShape, DimensionMismatch).
  SetFamily(std::vector<Shape> shapes, std::size_t dim, std::string name = {});
  explicit SetFamily(Shape shape);

  std::size_t dim() const { return dim_; }
  const std::vector<Shape>& shapes() const { return shapes_; }
  bool empty() const { return shapes_.empty(); }
  const std::string& name() const { return name_; }
  std::string to_string() const;

 private:
  std::vector<Shape> shapes_;
  std::size_t dim_;
  std::string name_;
};

/// Representative choice is part of the value; operations are checked to be
/// invariant under representative change in the test suite.
using InternalSet = SetFamily;

SetFamily make_interval(const GenNumber& lo, const GenNumber& hi);
SetFamily make_points(const std::vector<VecNet>& pts);
SetFamily make_exterior(const GenNumber& r, std::size_t dim = 1);

/// SET := SHAPE ("|" SHAPE)* ; SHAPE := interval(NET,NET) | box(interval(..),...)
///      | points(P;...) with P = NET or (NET,...) | exterior(NET[,d]) | empty[(d)].
SetFamily parse_set(std::string_view text);

struct MembershipReport {
  Judgement member;
  /// dist_∞(u_ε, A_ε); absent for the empty family.
  std::optional<GenNumber> distance;
};

MembershipReport contains(const InternalSet& a, const VecNet& u, const Config& cfg = default_config());

struct BoundReport {
  bool bounded;
  /// Smallest M ≥ 0 with sup |A_ε| = O(ε^{-M}).
  int M = 0;
  /// ε ↦ sup_{x∈A_ε} |x|_∞ (absent when unbounded).
  std::optional<GenNumber> sup;
  Backend backend = Backend::exact;
};

BoundReport is_sharply_bounded(const SetFamily& a, const Config& cfg = default_config());

struct TrimResult {
  SetFamily family;
  /// Every shape of the original family already satisfies |x| ≤ ε^{-M} eventually.
  bool precondition_verified;
};

/// A_ε ∩ {|x|_∞ ≤ ε^{-M} + 1}. Throws EmptyClip when nothing survives.
TrimResult trim_bounded(const InternalSet& a, int M, const Config& cfg = default_config());

struct MinDistance {
  GenNumber distance;
  VecNet u;  // in A
  VecNet v;  // in B
};

/// Attained min of ‖u − v‖ over u ∈ A, v ∈ B (A sharply bounded).
MinDistance min_distance(const InternalSet& a, const InternalSet& b, const Config& cfg = default_config());

struct MaxNorm {
  GenNumber norm;
  VecNet witness;
};

MaxNorm max_norm(const InternalSet& a, const Config& cfg = default_config());

struct SharpBallCase {
  std::string u;
  double c;                 // ν(u)
  bool v_in_ball;           // ⟦ε^{c/2}⟧ < 1
  bool v_strictly_larger;   // |v| − |u| eventually positive and not negligible
  bool h_bounds_u;          // |u| ≤ 1/|log ε| on the grid tail
};

struct SharpBallDemo {
  std::vector<SharpBallCase> cases;
  double h_valuation;       // grid estimate for h_ε = 1/|log ε|
  bool all_ok = false;
};

/// The sharp unit ball {x : ⟦x⟧ < 1} has no maximal norm: for random members u
/// with ν(u) = c > 0, v = ε^{c/2} is a member with strictly larger norm, while
/// h = 1/|log ε| bounds all of them. Not a SetFamily.
SharpBallDemo sharp_ball_demo(int count, unsigned long seed, const Config& cfg = default_config());

/// Splice of points over a partition of (0, η). An empty region stands for
/// "every other ε". Throws NotAPartition on overlap or uncovered ε near 0.
VecNet interleave(const std::vector<std::pair<VecNet, Region>>& parts);

InternalSet internal_union(const InternalSet& a, const InternalSet& b);

struct InclusionReport {
  Judgement holds;
  /// Directed sup-distance (subset) or Hausdorff distance (equality); absent
  /// when a nonempty family is compared with an empty one.
  std::optional<GenNumber> delta;
};

InclusionReport subset_report(const InternalSet& a, const InternalSet& b, const Config& cfg = default_config());
InclusionReport equality_report(const InternalSet& a, const InternalSet& b, const Config& cfg = default_config());

/// {x : d(x, A_ε) ≤ ε^m}.
SetFamily fatten(const SetFamily& a, int m);

/// Per-ε intersection of two families, with eventually empty pieces dropped.
/// UnsupportedShapeCombo for shells (exterior ∩ box in d > 1) and for pairs
/// whose emptiness differs between recurring comb pieces.
SetFamily intersect_families(const SetFamily& a, const SetFamily& b, const Config& cfg = default_config());

InternalSet product(const InternalSet& a, const InternalSet& b);

struct Projection {
  SetFamily family;
  /// False when A has no sharply bounded representative: the family is then only
  /// an upper bound for the projection.
  bool verified;
};

/// Throws NotSharplyBounded unless `allow_unbounded`, in which case the
/// coordinatewise projection is returned with verified = false.
Projection project(const InternalSet& a, const std::vector<std::size_t>& coords, bool allow_unbounded = false,
                   const Config& cfg = default_config());

/// Random member of the internal set, symbolic when the family is.
VecNet random_member(const SetFamily& a, std::mt19937_64& rng);

/// Sign pattern of a net near 0: used to decide per-ε emptiness.
enum class EventualSign { nonneg, neg, mixed };
EventualSign eventual_sign_class(const GenNumber& x, const Config& cfg = default_config());

}  // namespace colombeau
