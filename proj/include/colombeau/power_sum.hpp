#pragma once

#include <string>
#include <vector>

#include "colombeau/real.hpp"

namespace colombeau {

struct Term {
  double coeff;
  double expo;
  bool operator==(const Term&) const = default;
};

/// Sign information carried by the formal negligible atom ε^{1/ε}.
/// `unknown` arises when atoms of opposite sign meet and may cancel.
enum class NeglSign : signed char { none, positive, negative, unknown };

NeglSign negl_add(NeglSign a, NeglSign b);
NeglSign negl_flip(NeglSign s);
NeglSign negl_times_sign(NeglSign s, int sign);

/// Finite sum Σ c_i ε^{e_i} with strictly increasing exponents, plus an optional
/// negligible atom. Always moderate; negligible iff the term list is empty.
class PowerSum {
 public:
  PowerSum() = default;
  PowerSum(std::vector<Term> terms, NeglSign negl = NeglSign::none);

  static PowerSum constant(double c);
  static PowerSum monomial(double coeff, double expo);
  static PowerSum alpha() { return monomial(1.0, 1.0); }
  static PowerSum negligible(NeglSign sign = NeglSign::positive);

  const std::vector<Term>& terms() const { return terms_; }
  NeglSign negl() const { return negl_; }

  /// The canonical zero: no terms and no negligible atom.
  bool is_zero() const { return terms_.empty() && negl_ == NeglSign::none; }
  bool is_negligible() const { return terms_.empty(); }

  /// Smallest exponent; +inf when negligible.
  double valuation() const;

  /// Eventual sign as ε → 0. Throws IndeterminateSign for an unknown-sign atom alone.
  int eventual_sign() const;

  /// Pointwise value; the atom is realized as ±ε^{1/ε} (unknown sign samples as +).
  Real eval(const Real& eps) const;

  PowerSum operator-() const;
  PowerSum scaled(double factor) const;
  PowerSum abs() const;

  friend PowerSum operator+(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator-(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b);
  bool operator==(const PowerSum&) const = default;

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<Term> terms_;
  NeglSign negl_ = NeglSign::none;
};

}  // namespace colombeau
