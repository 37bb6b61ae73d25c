#include "colombeau/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "colombeau/error.hpp"

namespace colombeau {

NeglSign negl_add(NeglSign a, NeglSign b) {
  if (a == NeglSign::none) return b;
  if (b == NeglSign::none) return a;
  if (a == b) return a;
  return NeglSign::unknown;
}

NeglSign negl_flip(NeglSign s) {
  if (s == NeglSign::positive) return NeglSign::negative;
  if (s == NeglSign::negative) return NeglSign::positive;
  return s;
}

NeglSign negl_times_sign(NeglSign s, int sign) {
  if (sign == 0) return NeglSign::none;
  return sign > 0 ? s : negl_flip(s);
}

PowerSum::PowerSum(std::vector<Term> terms, NeglSign negl) : terms_(std::move(terms)), negl_(negl) {
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coeff) || !std::isfinite(t.expo))
      throw Error(ErrorCode::invalid_argument, "power sum terms must be finite");
  }
  canonicalize();
}

PowerSum PowerSum::constant(double c) { return PowerSum({{c, 0.0}}); }

PowerSum PowerSum::monomial(double coeff, double expo) { return PowerSum({{coeff, expo}}); }

PowerSum PowerSum::negligible(NeglSign sign) { return PowerSum({}, sign); }

void PowerSum::canonicalize() {
  std::map<double, double> by_expo;
  for (const auto& t : terms_) by_expo[t.expo] += t.coeff;
  terms_.clear();
  for (const auto& [e, c] : by_expo) {
    if (c != 0.0) terms_.push_back({c, e});
  }
}

double PowerSum::valuation() const {
  return terms_.empty() ? std::numeric_limits<double>::infinity() : terms_.front().expo;
}

int PowerSum::eventual_sign() const {
  if (!terms_.empty()) return terms_.front().coeff > 0 ? 1 : -1;
  switch (negl_) {
    case NeglSign::none: return 0;
    case NeglSign::positive: return 1;
    case NeglSign::negative: return -1;
    case NeglSign::unknown: break;
  }
  throw Error(ErrorCode::indeterminate_sign,
              "eventual sign of a negligible atom of unknown sign cannot be resolved");
}

Real PowerSum::eval(const Real& eps) const {
  Real sum = 0;
  for (const auto& t : terms_) sum += Real(t.coeff) * eps_pow(eps, t.expo);
  if (negl_ != NeglSign::none) {
    const Real atom = negl_atom(eps);
    if (negl_ == NeglSign::negative) sum -= atom;
    else sum += atom;
  }
  return sum;
}

PowerSum PowerSum::operator-() const { return scaled(-1.0); }

PowerSum PowerSum::scaled(double factor) const {
  if (factor == 0.0) return {};
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return PowerSum(std::move(out), negl_times_sign(negl_, factor > 0 ? 1 : -1));
}

PowerSum PowerSum::abs() const {
  if (terms_.empty()) {
    return PowerSum({}, negl_ == NeglSign::none ? NeglSign::none : NeglSign::positive);
  }
  return eventual_sign() < 0 ? -*this : *this;
}

PowerSum operator+(const PowerSum& a, const PowerSum& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PowerSum(std::move(terms), negl_add(a.negl_, b.negl_));
}

PowerSum operator-(const PowerSum& a, const PowerSum& b) { return a + (-b); }

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) terms.push_back({x.coeff * y.coeff, x.expo + y.expo});
  }
  // (T_a + n_a)(T_b + n_b): the cross terms are negligible with the sign of the
  // leading coefficient times the atom's sign.
  NeglSign negl = NeglSign::none;
  if (b.negl_ != NeglSign::none && !a.terms_.empty())
    negl = negl_add(negl, negl_times_sign(b.negl_, a.terms_.front().coeff > 0 ? 1 : -1));
  if (a.negl_ != NeglSign::none && !b.terms_.empty())
    negl = negl_add(negl, negl_times_sign(a.negl_, b.terms_.front().coeff > 0 ? 1 : -1));
  if (a.negl_ != NeglSign::none && b.negl_ != NeglSign::none) {
    NeglSign prod = NeglSign::unknown;
    if (a.negl_ != NeglSign::unknown && b.negl_ != NeglSign::unknown)
      prod = a.negl_ == b.negl_ ? NeglSign::positive : NeglSign::negative;
    negl = negl_add(negl, prod);
  }
  return PowerSum(std::move(terms), negl);
}

std::string PowerSum::to_string() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& t : terms_) {
    double c = t.coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = std::fabs(c);
    }
    os << c;
    if (t.expo != 0.0) os << "*eps^" << t.expo;
    first = false;
  }
  if (negl_ != NeglSign::none) {
    if (first) os << (negl_ == NeglSign::negative ? "-NEGL" : "NEGL");
    else os << (negl_ == NeglSign::negative ? " - NEGL" : " + NEGL");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace colombeau
