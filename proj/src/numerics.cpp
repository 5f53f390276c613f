#include "lastarrival/numerics.hpp"

#include <gmp.h>

#include <string>

#include "lastarrival/errors.hpp"

namespace lastarrival::numerics {

ExtendedScalar binomial(long n, long k, long precision_bits) {
  if (n < 0 || k < 0) throw DomainError("binomial: negative argument");
  if (k > n) throw DomainError("binomial: k > n (k=" + std::to_string(k) +
                               ", n=" + std::to_string(n) + ")");
  if (n > 1000000) throw DomainError("binomial: n > 10^6");
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  ExtendedScalar out(precision_bits);
  mpfr_set_z(out.raw(), z, MPFR_RNDN);
  mpz_clear(z);
  return out;
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > 30) throw DomainError("catalan: n must be in [0, 30]");
  // C_n = binomial(2n, n) / (n + 1), exact in 64 bits for n <= 30.
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, 2ul * n, static_cast<unsigned long>(n));
  mpz_divexact_ui(z, z, static_cast<unsigned long>(n) + 1);
  std::uint64_t out = mpz_get_ui(z);
  mpz_clear(z);
  return out;
}

namespace {

ExtendedScalar x_exp_minus_x(const ExtendedScalar& x) {
  return x * exp(-x);
}

// Bisection on [lo, hi] for f(x) = x e^{-x} - theta, monotone on the bracket.
// `rising` says whether f increases with x on this bracket.
ExtendedScalar bisect_x_exp(const ExtendedScalar& theta, ExtendedScalar lo, ExtendedScalar hi,
                            bool rising, const ExtendedScalar& width) {
  while (hi - lo > width) {
    ExtendedScalar mid = (lo + hi);
    mid.div_ui(2);
    if (mid == lo || mid == hi) break;
    bool below = x_exp_minus_x(mid) < theta;
    if (below == rising)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  ExtendedScalar mid = (lo + hi);
  mid.div_ui(2);
  return mid;
}

}  // namespace

std::pair<ExtendedScalar, ExtendedScalar> solve_x_exp(const ExtendedScalar& theta) {
  const long prec = theta.precision();
  if (!theta.is_positive()) throw DomainError("solve_x_exp: theta must be positive");
  const ExtendedScalar peak = ExtendedScalar::e_inverse(prec);
  if (theta > peak)
    throw NoSolutionError("solve_x_exp: theta > 1/e, x*exp(-x) never reaches it");
  const ExtendedScalar one(1L, prec);
  if (theta == peak) return {one, one};

  // Bisect to ~half precision, then Newton-polish. Near x = 1 the derivative
  // (1-x)e^{-x} vanishes, so the polish is skipped inside a guard band.
  const ExtendedScalar coarse = exp2i(-(prec / 2) - 4, prec);
  const ExtendedScalar guard = exp2i(-(prec / 4), prec);

  auto polish = [&](ExtendedScalar x) {
    if (abs(one - x) < guard) return x;
    for (int it = 0; it < 8; ++it) {
      ExtendedScalar ex = exp(-x);
      ExtendedScalar resid = x * ex - theta;
      ExtendedScalar deriv = (one - x) * ex;
      if (deriv.is_zero()) break;
      ExtendedScalar step = resid / deriv;
      x -= step;
      if (abs(step) < exp2i(-prec + 2, prec)) break;
    }
    return x;
  };

  ExtendedScalar x1 = polish(bisect_x_exp(theta, ExtendedScalar(prec), one, true, coarse));

  ExtendedScalar hi = ExtendedScalar(2L, prec);
  while (x_exp_minus_x(hi) > theta) {
    hi.mul_ui(2);
    if (hi > ExtendedScalar(1000000L, prec))
      throw InvariantError("solve_x_exp: no upper bracket for x2");
  }
  ExtendedScalar x2 = polish(bisect_x_exp(theta, one, hi, false, coarse));
  return {x1, x2};
}

ExtendedScalar find_root_bracketed(const std::function<ExtendedScalar(const ExtendedScalar&)>& f,
                                   ExtendedScalar lo, ExtendedScalar hi,
                                   const ExtendedScalar& width) {
  ExtendedScalar flo = f(lo);
  ExtendedScalar fhi = f(hi);
  if (flo.is_zero()) return lo;
  if (fhi.is_zero()) return hi;
  if (flo.is_negative() == fhi.is_negative())
    throw DomainError("find_root_bracketed: endpoints do not bracket a root");

  // Illinois: after two consecutive updates on the same side, halve the
  // retained endpoint's function value. Every 8th step falls back to plain
  // bisection so pathological shapes still shrink geometrically.
  int side = 0;
  for (int it = 0; it < 4 * static_cast<int>(lo.precision()); ++it) {
    if (abs(hi - lo) <= width) break;
    ExtendedScalar denom = fhi - flo;
    ExtendedScalar mid(lo.precision());
    if (denom.is_zero() || (it % 8 == 7)) {
      mid = lo + hi;
      mid.div_ui(2);
    } else {
      mid = lo - flo * (hi - lo) / denom;
      if (!(mid > min(lo, hi) && mid < max(lo, hi))) {
        mid = lo + hi;
        mid.div_ui(2);
      }
    }
    if (mid == lo || mid == hi) break;
    ExtendedScalar fm = f(mid);
    if (fm.is_zero()) return mid;
    if (fm.is_negative() == flo.is_negative()) {
      lo = std::move(mid);
      flo = std::move(fm);
      if (side == -1) fhi.div_ui(2);
      side = -1;
    } else {
      hi = std::move(mid);
      fhi = std::move(fm);
      if (side == 1) flo.div_ui(2);
      side = 1;
    }
  }
  ExtendedScalar mid = lo + hi;
  mid.div_ui(2);
  return mid;
}

}  // namespace lastarrival::numerics
