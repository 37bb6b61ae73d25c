#include "colombeau/real.hpp"

#include <cmath>
#include <limits>

#include <mpfr.h>

namespace colombeau {

namespace {

unsigned& current_bits() {
  static unsigned bits = 0;
  return bits;
}

unsigned digits10_for(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct ContextInit {
  ContextInit() { use_precision(2048); }
};

const ContextInit context_init;

}  // namespace

void use_precision(unsigned bits) {
  mpfr_set_emin(mpfr_get_emin_min());
  mpfr_set_emax(mpfr_get_emax_max());
  Real::default_precision(digits10_for(bits));
  current_bits() = bits;
}

unsigned precision_bits() { return current_bits(); }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(current_bits()) { use_precision(bits); }

PrecisionScope::~PrecisionScope() { use_precision(saved_); }

Real pow2(long e) { return boost::multiprecision::ldexp(Real(1), e); }

Real eps_pow(const Real& eps, double e) {
  if (e == 0.0) return Real(1);
  if (eps > 0) {
    int binary_exp = 0;
    const Real mant = boost::multiprecision::frexp(eps, &binary_exp);
    if (mant == Real(0.5)) {
      const Real t = Real(binary_exp - 1) * Real(e);
      if (boost::multiprecision::floor(t) == t && boost::multiprecision::abs(t) < Real(4.0e18)) {
        return pow2(t.convert_to<long>());
      }
      return boost::multiprecision::pow(Real(2), t);
    }
  }
  return boost::multiprecision::pow(eps, Real(e));
}

Real negl_atom(const Real& eps) {
  int binary_exp = 0;
  const Real mant = boost::multiprecision::frexp(eps, &binary_exp);
  if (mant == Real(0.5) && binary_exp <= 1 && binary_exp > -56) {
    // ε = 2^-k: ε^{1/ε} = 2^{-k·2^k}, exact.
    const long k = 1 - binary_exp;
    return pow2(-k * (1L << k));
  }
  return boost::multiprecision::pow(eps, Real(1) / eps);
}

double log_abs(const Real& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  return boost::multiprecision::log(boost::multiprecision::abs(x)).convert_to<double>();
}

int sign_of(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace colombeau
