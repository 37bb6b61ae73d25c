#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "colombeau/real.hpp"

namespace colombeau {

/// Real expression in the variable x and the parameter eps.
///
/// EXPR := SUM ; SUM := PROD (("+"|"-") PROD)* ; PROD := UNARY (("*"|"/") UNARY)* ;
/// UNARY := "-" UNARY | POW ; POW := ATOM ["^" UNARY] ;
/// ATOM := number | "x" | "eps" | "(" EXPR ")" | FN "(" EXPR ["," EXPR] ")"
/// with FN ∈ {abs, exp, log, sqrt, min, max}.
///
/// Division of a nonzero value by zero yields ±inf so that eps^(1/x) is 0 at
/// x = 0; any other non-finite or undefined result is a DomainEvaluationError.
class Expr {
 public:
  struct Node;

  static Expr parse(std::string_view text);

  Real eval(const Real& x, const Real& eps) const;
  /// True when the body does not mention x.
  bool constant_in_x() const;
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace colombeau
