#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace colombeau {

/// Per-ε scalar of the numeric backend. MPFR with the widest exponent range the
/// library allows, so that ε^{-M} and ε^{1/ε} are representable at every grid
/// depth we use, and enough mantissa to resolve perturbations far below ε^{m_max}.
using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision (bits) for Reals created afterwards.
void use_precision(unsigned bits);
unsigned precision_bits();

/// Restores the working precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// 2^e, exact.
Real pow2(long e);

/// ε^e. Exact when ε is a power of two and the resulting exponent is integral.
Real eps_pow(const Real& eps, double e);

/// The fixed negligible net ε^{1/ε}.
Real negl_atom(const Real& eps);

/// ln|x| as a double; -inf for x == 0.
double log_abs(const Real& x);

int sign_of(const Real& x);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace colombeau
