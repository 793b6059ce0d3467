#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "ratexp/errors.hpp"

namespace ratexp {

enum class Sign { negative = -1, undecided = 0, positive = 1 };

// Midpoint-radius enclosure of a real number.
//
// Invariant: the represented value lies in [mid - rad, mid + rad]. Every
// operation returns a ball whose interval contains the exact image of the
// operand intervals; midpoints round to nearest at the ball's precision and
// all rounding slack is absorbed into the radius (rounded up). Radii are kept
// at a small fixed precision, like the usual mid-rad representations.
//
// Values are immutable in normal use and safe to share across threads.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadiusPrec = 64;
  static constexpr mpfr_prec_t kMinPrec = 64;
  static constexpr mpfr_prec_t kMaxPrec = mpfr_prec_t{1} << 20;

  Ball() : Ball(kMinPrec) {}
  explicit Ball(mpfr_prec_t prec);  // exact zero
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }

  static Ball exact(long value, mpfr_prec_t prec);
  static Ball exact(const mpz_class& value, mpfr_prec_t prec);
  static Ball exact(double value, mpfr_prec_t prec);
  static Ball of_rational(const mpq_class& value, mpfr_prec_t prec);
  static Ball from_decimal(const std::string& text, mpfr_prec_t prec);
  static Ball e(mpfr_prec_t prec);  // Euler's number

  // Enclosure of [lo, hi]; lo <= hi required.
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);

  bool is_exact() const { return mpfr_zero_p(rad_); }
  bool is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }
  bool contains_zero() const;
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  // Exact points at or below (resp. at or above) every value of the ball.
  Ball lower_point() const;
  Ball upper_point() const;
  // Exact ball holding just the midpoint.
  Ball mid_point() const;

  // Decimal strings that recover the exact mid/rad when re-read at the same
  // precision (round to nearest).
  std::string mid_string() const;
  std::string rad_string() const;

  // Direct access for modules doing raw mpfr work on midpoints; callers own
  // the enclosure invariant when they write through these.
  mpfr_ptr mid() { return mid_; }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr rad() { return rad_; }
  mpfr_srcptr rad() const { return rad_; }

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);

Ball abs(const Ball& x);
Ball exp(const Ball& x);
Ball log(const Ball& x);       // ball must be strictly positive
Ball sqrt(const Ball& x);      // ball must be nonnegative
Ball pow_int(const Ball& x, long k);
Ball pow_ratio(const Ball& x, const mpq_class& q);  // strictly positive base
Ball max(const Ball& a, const Ball& b);
Ball mul_2si(const Ball& x, long k);
Ball mul_z(const Ball& x, const mpz_class& z);
Ball sub_z(const Ball& x, const mpz_class& z);
Ball sub_q(const Ball& x, const mpq_class& q);
Ball log_z(const mpz_class& n, mpfr_prec_t prec);  // log of an exact integer >= 1
Ball round_to(const Ball& x, mpfr_prec_t prec);

Sign certify_sign(const Ball& x);
bool certainly_positive(const Ball& x);
bool certainly_negative(const Ball& x);
// sup(a) < inf(b) with outward rounding: a conservative certificate.
bool certainly_less(const Ball& a, const Ball& b);
bool certainly_leq(const Ball& a, const Ball& b);
bool certainly_less_q(const Ball& x, const mpq_class& q);
bool certainly_greater_q(const Ball& x, const mpq_class& q);
// Exact membership test of a rational point.
bool contains_q(const Ball& x, const mpq_class& q);
// Interval intersection / containment; diagnostic helpers for tests.
bool overlaps(const Ball& a, const Ball& b);
bool contains(const Ball& outer, const Ball& inner);

// Nearest integer to the ball, if the ball certifies it (stays strictly
// inside (m - 1/2, m + 1/2)).
std::optional<mpz_class> nearest_integer(const Ball& x);
// Ceiling / floor of the ball, if unambiguous.
std::optional<mpz_class> ceil_integer(const Ball& x);
std::optional<mpz_class> floor_integer(const Ball& x);

}  // namespace ratexp
