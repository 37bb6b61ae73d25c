#pragma once

#include <string>
#include <variant>
#include <vector>

#include "colombeau/config.hpp"
#include "colombeau/piecewise_net.hpp"
#include "colombeau/sampled_net.hpp"

namespace colombeau {

enum class Backend { exact, heuristic };

const char* backend_name(Backend b);

struct Judgement {
  bool value;
  Backend backend;
  explicit operator bool() const { return value; }
};

struct ValuationEstimate {
  double value;
  Backend backend;
};

const Config& default_config();
Grid grid_of(const Config& cfg);

/// Element of R̃ through one of its representatives: a symbolic piecewise net
/// or a sampled net on the ε-grid. Mixed arithmetic samples the symbolic side.
class GenNumber {
 public:
  GenNumber() : rep_(PiecewiseNet{}) {}
  GenNumber(PiecewiseNet net) : rep_(std::move(net)) {}
  GenNumber(SampledNet net) : rep_(std::move(net)) {}

  static GenNumber constant(double c) { return PiecewiseNet::constant(c); }
  static GenNumber alpha() { return PiecewiseNet::alpha(); }

  bool symbolic() const { return std::holds_alternative<PiecewiseNet>(rep_); }
  Backend backend() const { return symbolic() ? Backend::exact : Backend::heuristic; }
  const PiecewiseNet& net() const { return std::get<PiecewiseNet>(rep_); }
  const SampledNet& samples() const { return std::get<SampledNet>(rep_); }

  /// Value at ε. Sampled numbers only answer on their grid points.
  Real eval(const Real& eps) const;
  SampledNet sampled(const Grid& grid) const;

  std::string to_string() const;

 private:
  std::variant<PiecewiseNet, SampledNet> rep_;
};

GenNumber operator+(const GenNumber& a, const GenNumber& b);
GenNumber operator-(const GenNumber& a, const GenNumber& b);
GenNumber operator*(const GenNumber& a, const GenNumber& b);
GenNumber operator-(const GenNumber& a);
GenNumber scale(const GenNumber& a, double factor);
GenNumber abs(const GenNumber& a);
GenNumber max(const GenNumber& a, const GenNumber& b);
GenNumber min(const GenNumber& a, const GenNumber& b);
GenNumber select_ge(const GenNumber& key_a, const GenNumber& key_b, const GenNumber& if_ge,
                    const GenNumber& if_lt);
/// Pointwise ε ↦ f(x_ε), always sampled.
GenNumber map_sampled(const GenNumber& x, const Grid& grid, const std::function<Real(const Real&, const Real&)>& f);

ValuationEstimate valuation(const GenNumber& x, const Config& cfg = default_config());
/// exp(-ν); 0 for ν = +inf.
double sharp_norm(const GenNumber& x, const Config& cfg = default_config());
Judgement is_negligible(const GenNumber& x, const Config& cfg = default_config());
Judgement is_moderate(const GenNumber& x, const Config& cfg = default_config());
/// Negligibility of a − b. Throws BackendMismatch when the backends differ.
Judgement gen_eq(const GenNumber& a, const GenNumber& b, const Config& cfg = default_config());
/// a ≥ b in R̃: max(b − a, 0) is negligible.
Judgement eventually_ge(const GenNumber& a, const GenNumber& b, const Config& cfg = default_config());

/// Point of R̃^d. A single sampled component puts every component on its grid.
class VecNet {
 public:
  VecNet() = default;
  VecNet(std::vector<GenNumber> comps);
  VecNet(GenNumber x) : VecNet(std::vector<GenNumber>{std::move(x)}) {}

  std::size_t dim() const { return comps_.size(); }
  const GenNumber& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<GenNumber>& comps() const { return comps_; }
  bool symbolic() const;
  std::string to_string() const;

 private:
  std::vector<GenNumber> comps_;
};

/// |u|_∞ as a net.
GenNumber norm_inf(const VecNet& u);
GenNumber dist_inf(const VecNet& u, const VecNet& v);
VecNet concat(const VecNet& a, const VecNet& b);

}  // namespace colombeau
