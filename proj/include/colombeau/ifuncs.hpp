#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "colombeau/expr.hpp"
#include "colombeau/isets.hpp"

namespace colombeau {

/// Induced map x ↦ f_ε(x) on a one-dimensional domain family.
struct ExprFn {
  Expr body;
  SetFamily domain;
};

ExprFn make_fn(std::string_view body, const SetFamily& domain);

struct ImageBound {
  bool bounded;
  int M = 0;
  std::optional<GenNumber> sup;  // ε ↦ sup |f_ε| over A_ε
};

/// Graph {(x, f_ε(x)) : x ∈ A_ε} realized on the ε-grid. The domain is kept as
/// per-ε closed components; nearest points are exact clips and searches stop at
/// resolution ε^{m_mesh}.
class GraphFamily {
 public:
  struct Component {
    Real lo;  // may be -inf
    Real hi;  // may be +inf
  };

  const ExprFn& fn() const { return fn_; }
  const Grid& grid() const { return grid_; }
  std::size_t index(int k) const { return static_cast<std::size_t>(k - grid_.k_min); }
  Real eps(int k) const { return pow2(-k); }

  /// Merged, sorted domain components at grid point k.
  const std::vector<Component>& components(int k) const { return merged_[index(k)]; }
  /// Components contributed by one domain shape at grid point k.
  const std::vector<Component>& shape_components(std::size_t shape, int k) const {
    return per_shape_[shape][index(k)];
  }
  bool bounded_domain() const { return bounded_; }
  /// Piecewise-linear interpolant mesh exponent, if this graph is one.
  std::optional<int> interpolant_mesh() const;
  /// The interpolated graph; null unless this graph is an interpolant.
  const GraphFamily* interpolated() const { return base_.get(); }

  /// Nearest domain point; ties go to the smaller x.
  Real clip(const Real& x, int k) const;
  /// Graph value at a domain point.
  Real value(const Real& x, int k) const;
  /// Nearest-point map g_ε(x) = value(clip(x)).
  Real g(const Real& x, int k) const { return value(clip(x, k), k); }

 private:
  friend GraphFamily make_graph(const ExprFn&, const Config&);
  friend GraphFamily pl_interpolant(const GraphFamily&, int);
  friend ImageBound image_bound(const GraphFamily&, const Config&);

  struct ImageCache {
    std::mutex lock;
    std::optional<std::pair<std::string, ImageBound>> entry;  // keyed by config
  };

  ExprFn fn_;
  Grid grid_;
  bool bounded_ = false;
  std::vector<std::vector<Component>> merged_;
  std::vector<std::vector<std::vector<Component>>> per_shape_;
  std::shared_ptr<const GraphFamily> base_;  // set for interpolants
  int mesh_ = 0;
  std::shared_ptr<ImageCache> image_cache_ = std::make_shared<ImageCache>();
};

/// Realizes the graph; DomainEvaluationError when the body fails on the domain.
GraphFamily make_graph(const ExprFn& f, const Config& cfg = default_config());

/// (x, y) lies on the graph: |x − clip(x)| and |y − f(clip(x))| are negligible.
Judgement graph_contains(const GraphFamily& g, const GenNumber& x, const GenNumber& y,
                         const Config& cfg = default_config());

struct EvalResult {
  GenNumber value;  // sampled
  /// Domain and image are sharply bounded, so the value is independent of the
  /// representative of x.
  bool guaranteed;
};
/// ε ↦ g_ε(x_ε). OutsideDomain when x is not in the domain.
EvalResult eval_at(const GraphFamily& g, const GenNumber& x, const Config& cfg = default_config());

/// Memoized per graph and search configuration.
ImageBound image_bound(const GraphFamily& g, const Config& cfg = default_config());

/// Per-ε image f_ε(A_ε) as a family of sampled intervals and points.
/// NotSharplyBounded when the domain is unbounded.
SetFamily image_family(const GraphFamily& g, const Config& cfg = default_config());
/// contains(image_family(g), y).
MembershipReport image_membership(const GraphFamily& g, const GenNumber& y, const Config& cfg = default_config());

struct ModulusReport {
  int n;
  int m;
  /// Deepest-first: the condition holds for every grid k ≥ threshold_k.
  int threshold_k;
};
/// Smallest m in [1, m_cap] with |x − x'| ≤ ε^m ⇒ |g_ε(x) − g_ε(x')| ≤ ε^n on the
/// last `slope_window` grid points (sampled pairs). NoModulusFound past m_cap.
ModulusReport continuity_modulus(const GraphFamily& g, int n, int m_cap = 40, const Config& cfg = default_config());

/// Per-ε piecewise-linear interpolant of g on the mesh ε^m ℤ.
GraphFamily pl_interpolant(const GraphFamily& g, int m);

struct InterpolantError {
  GenNumber sup_error;  // sampled ε ↦ sup |h_ε − g_ε|
  ValuationEstimate valuation;
  Judgement negligible;
};
InterpolantError interpolant_error(const GraphFamily& h, const Config& cfg = default_config());

struct ZeroSetCase {
  std::string x;
  bool x_is_zero;        // f(x) = 0
  bool y_greater;        // y − x is positive and invertible
  bool fy_zero;          // f(y) = 0
  double deep_ratio;     // ln f(y) / ln ε at the deepest probe
};
struct ZeroSetDemo {
  std::vector<ZeroSetCase> cases;
  bool all_ok = false;
};
/// f_ε(x) = ε^{1/x} on [0,1]: for zeros x = 0, α and 1/log|log ε| the point
/// y = x + 1/|log ε| is a strictly larger zero, so |x| has no maximum on f^{-1}(0).
/// Zeros that decay slower than any power are certified by probing
/// ε = 2^{-2^j} in log space.
ZeroSetDemo zero_set_demo(const Config& cfg = default_config());

struct NonclosedImageDemo {
  bool unbounded_refused;     // image over all of R̃ is refused
  bool one_rejected;          // 1 ∉ f([-1,1])
  bool half_accepted;         // 1/2 ∈ f([-1,1])
  /// For the restrictions |x| ≤ ε^{-M}: estimated valuation of dist(1, image).
  std::vector<std::pair<int, double>> gap_valuations;
  bool ok = false;
};
/// f(x) = x²/(1+x²): 1 is in the closure of f(R̃) but not in the image.
NonclosedImageDemo nonclosed_image_demo(int max_M = 6, const Config& cfg = default_config());

}  // namespace colombeau
