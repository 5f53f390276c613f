#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace lastarrival {

/// Extended-precision real number backed by MPFR.
///
/// Every value carries its own precision in bits; results of binary
/// operations use the wider of the two operand precisions. All rounding is
/// to nearest-even, so any expression evaluates to exactly one value for a
/// fixed precision setting regardless of thread or call order.
class ExtendedScalar {
 public:
  static constexpr long kDefaultPrecision = 120;

  ExtendedScalar() : ExtendedScalar(kDefaultPrecision) {}
  explicit ExtendedScalar(long precision_bits);
  ExtendedScalar(double value, long precision_bits);
  ExtendedScalar(long value, long precision_bits);

  ExtendedScalar(const ExtendedScalar& other);
  ExtendedScalar(ExtendedScalar&& other) noexcept;
  ExtendedScalar& operator=(const ExtendedScalar& other);
  ExtendedScalar& operator=(ExtendedScalar&& other) noexcept;
  ~ExtendedScalar();

  /// Parses a decimal string ("0.35", "3.5e-1", "-1.2") at the given precision.
  static ExtendedScalar from_string(std::string_view decimal, long precision_bits);
  /// e = exp(1) correctly rounded.
  static ExtendedScalar eulers_number(long precision_bits);
  /// 1/e correctly rounded (the paper's pivotal test value).
  static ExtendedScalar e_inverse(long precision_bits);

  long precision() const { return mpfr_get_prec(value_); }
  /// Same numeric value re-rounded at a different precision.
  ExtendedScalar at_precision(long precision_bits) const;

  ExtendedScalar operator-() const;
  ExtendedScalar& operator+=(const ExtendedScalar& rhs);
  ExtendedScalar& operator-=(const ExtendedScalar& rhs);
  ExtendedScalar& operator*=(const ExtendedScalar& rhs);
  ExtendedScalar& operator/=(const ExtendedScalar& rhs);

  friend ExtendedScalar operator+(ExtendedScalar lhs, const ExtendedScalar& rhs);
  friend ExtendedScalar operator-(ExtendedScalar lhs, const ExtendedScalar& rhs);
  friend ExtendedScalar operator*(ExtendedScalar lhs, const ExtendedScalar& rhs);
  friend ExtendedScalar operator/(ExtendedScalar lhs, const ExtendedScalar& rhs);

  ExtendedScalar& mul_ui(unsigned long k);
  ExtendedScalar& div_ui(unsigned long k);

  bool operator==(const ExtendedScalar& rhs) const { return mpfr_cmp(value_, rhs.value_) == 0; }
  std::strong_ordering operator<=>(const ExtendedScalar& rhs) const {
    int c = mpfr_cmp(value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int compare(double rhs) const { return mpfr_cmp_d(value_, rhs); }

  bool is_negative() const { return mpfr_sgn(value_) < 0; }
  bool is_positive() const { return mpfr_sgn(value_) > 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal string with enough digits to recover the value exactly when
  /// re-parsed at the same precision.
  std::string to_string() const;
  /// Decimal string rounded to `digits` significant digits.
  std::string to_string(int digits) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

ExtendedScalar exp(const ExtendedScalar& x);
ExtendedScalar log(const ExtendedScalar& x);
ExtendedScalar sqrt(const ExtendedScalar& x);
ExtendedScalar abs(const ExtendedScalar& x);
ExtendedScalar pow_ui(const ExtendedScalar& base, unsigned long e);
/// 2^e at the value's precision; handy for tolerance constants.
ExtendedScalar exp2i(long e, long precision_bits);
/// 10^e at the given precision.
ExtendedScalar exp10i(long e, long precision_bits);
const ExtendedScalar& min(const ExtendedScalar& a, const ExtendedScalar& b);
const ExtendedScalar& max(const ExtendedScalar& a, const ExtendedScalar& b);

}  // namespace lastarrival
