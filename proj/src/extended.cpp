#include "lastarrival/extended.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "lastarrival/errors.hpp"

namespace lastarrival {

namespace {
long checked_precision(long bits) {
  if (bits < 2) throw DomainError("precision must be at least 2 bits");
  return bits;
}
}  // namespace

ExtendedScalar::ExtendedScalar(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

ExtendedScalar::ExtendedScalar(double value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

ExtendedScalar::ExtendedScalar(long value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ExtendedScalar::ExtendedScalar(const ExtendedScalar& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtendedScalar::ExtendedScalar(ExtendedScalar&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

ExtendedScalar& ExtendedScalar::operator=(const ExtendedScalar& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ExtendedScalar& ExtendedScalar::operator=(ExtendedScalar&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

ExtendedScalar::~ExtendedScalar() { mpfr_clear(value_); }

ExtendedScalar ExtendedScalar::from_string(std::string_view decimal, long precision_bits) {
  ExtendedScalar out(precision_bits);
  std::string buf(decimal);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (end == buf.c_str() || *end != '\0')
    throw DomainError("not a decimal number: '" + buf + "'");
  return out;
}

ExtendedScalar ExtendedScalar::eulers_number(long precision_bits) {
  ExtendedScalar out(precision_bits);
  mpfr_set_ui(out.value_, 1, MPFR_RNDN);
  mpfr_exp(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ExtendedScalar ExtendedScalar::e_inverse(long precision_bits) {
  ExtendedScalar out(precision_bits);
  mpfr_set_si(out.value_, -1, MPFR_RNDN);
  mpfr_exp(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ExtendedScalar ExtendedScalar::at_precision(long precision_bits) const {
  ExtendedScalar out(precision_bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

ExtendedScalar ExtendedScalar::operator-() const {
  ExtendedScalar out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {
void widen_to(mpfr_t x, long bits) {
  if (mpfr_get_prec(x) >= bits) return;
  mpfr_t tmp;
  mpfr_init2(tmp, bits);
  mpfr_set(tmp, x, MPFR_RNDN);
  mpfr_swap(tmp, x);
  mpfr_clear(tmp);
}
}  // namespace

ExtendedScalar& ExtendedScalar::operator+=(const ExtendedScalar& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedScalar& ExtendedScalar::operator-=(const ExtendedScalar& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedScalar& ExtendedScalar::operator*=(const ExtendedScalar& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedScalar& ExtendedScalar::operator/=(const ExtendedScalar& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedScalar operator+(ExtendedScalar lhs, const ExtendedScalar& rhs) { return lhs += rhs; }
ExtendedScalar operator-(ExtendedScalar lhs, const ExtendedScalar& rhs) { return lhs -= rhs; }
ExtendedScalar operator*(ExtendedScalar lhs, const ExtendedScalar& rhs) { return lhs *= rhs; }
ExtendedScalar operator/(ExtendedScalar lhs, const ExtendedScalar& rhs) { return lhs /= rhs; }

ExtendedScalar& ExtendedScalar::mul_ui(unsigned long k) {
  mpfr_mul_ui(value_, value_, k, MPFR_RNDN);
  return *this;
}

ExtendedScalar& ExtendedScalar::div_ui(unsigned long k) {
  mpfr_div_ui(value_, value_, k, MPFR_RNDN);
  return *this;
}

std::string ExtendedScalar::to_string() const {
  if (!is_finite()) {
    if (mpfr_nan_p(value_)) return "nan";
    return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  }
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* digits = mpfr_get_str(nullptr, &exp10, 10, 0, value_, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);
  std::string sign;
  if (d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  // mpfr convention: value = 0.digits * 10^exp10. Render as d.ddd...e<k>.
  std::string out = sign + d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10 - 1));
  return out;
}

std::string ExtendedScalar::to_string(int digits) const {
  if (!is_finite()) return to_string();
  if (digits < 2) digits = 2;
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, value_) < 0)
    throw InvariantError("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

ExtendedScalar exp(const ExtendedScalar& x) {
  ExtendedScalar out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtendedScalar log(const ExtendedScalar& x) {
  ExtendedScalar out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtendedScalar sqrt(const ExtendedScalar& x) {
  ExtendedScalar out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtendedScalar abs(const ExtendedScalar& x) {
  ExtendedScalar out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

ExtendedScalar pow_ui(const ExtendedScalar& base, unsigned long e) {
  ExtendedScalar out(base.precision());
  mpfr_pow_ui(out.raw(), base.raw(), e, MPFR_RNDN);
  return out;
}

ExtendedScalar exp2i(long e, long precision_bits) {
  ExtendedScalar out(precision_bits);
  mpfr_set_ui_2exp(out.raw(), 1, e, MPFR_RNDN);
  return out;
}

ExtendedScalar exp10i(long e, long precision_bits) {
  ExtendedScalar out(precision_bits);
  mpfr_set_ui(out.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

const ExtendedScalar& min(const ExtendedScalar& a, const ExtendedScalar& b) {
  return b < a ? b : a;
}

const ExtendedScalar& max(const ExtendedScalar& a, const ExtendedScalar& b) {
  return a < b ? b : a;
}

}  // namespace lastarrival
