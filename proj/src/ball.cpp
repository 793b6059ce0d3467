#include "ratexp/ball.hpp"

#include <algorithm>
#include <cstring>

namespace ratexp {
namespace {

struct Raw {
  mpfr_t v;
  explicit Raw(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Raw() { mpfr_clear(v); }
  Raw(const Raw&) = delete;
  Raw& operator=(const Raw&) = delete;
  operator mpfr_ptr() { return v; }
  operator mpfr_srcptr() const { return v; }
  // several mpfr entry points are macros that apply -> to their argument
  mpfr_ptr operator->() { return v; }
  mpfr_srcptr operator->() const { return v; }
};

mpfr_prec_t clamp_prec(mpfr_prec_t p) {
  return std::max<mpfr_prec_t>(Ball::kMinPrec, std::min<mpfr_prec_t>(p, Ball::kMaxPrec));
}

mpfr_prec_t join_prec(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

// One-ulp upper bound on the midpoint rounding error when ternary != 0.
void absorb_rounding(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0) return;
  if (!mpfr_regular_p(mid)) {
    mpfr_set_inf(rad, 1);
    return;
  }
  Raw u(Ball::kRadiusPrec);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
}

// |x| rounded up into a radius-precision temporary.
void abs_up(mpfr_ptr out, mpfr_srcptr x) {
  mpfr_set(out, x, MPFR_RNDA);
  mpfr_abs(out, out, MPFR_RNDU);
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, clamp_prec(prec));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
  mpfr_init2(mid_, other.precision());
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
  mpfr_init2(mid_, kMinPrec);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball Ball::exact(long value, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_si(r.mid_, value, MPFR_RNDN);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::exact(const mpz_class& value, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_z(r.mid_, value.get_mpz_t(), MPFR_RNDN);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::exact(double value, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_d(r.mid_, value, MPFR_RNDN);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::of_rational(const mpq_class& value, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set_q(r.mid_, value.get_mpq_t(), MPFR_RNDN);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::from_decimal(const std::string& text, mpfr_prec_t prec) {
  Ball r(prec);
  char* end = nullptr;
  int t = mpfr_strtofr(r.mid_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0')
    throw domain_error("unparsable decimal number: '" + text + "'");
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::e(mpfr_prec_t prec) { return exp(exact(1L, prec)); }

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  if (mpfr_cmp(lo, hi) > 0) throw domain_error("from_endpoints: lo > hi");
  Ball r(prec);
  int t = mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
  t |= mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  Raw d1(kRadiusPrec), d2(kRadiusPrec);
  mpfr_sub(d1, r.mid_, lo, MPFR_RNDU);
  mpfr_sub(d2, hi, r.mid_, MPFR_RNDU);
  mpfr_max(r.rad_, d1, d2, MPFR_RNDU);
  if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

bool Ball::contains_zero() const {
  if (mpfr_nan_p(mid_)) return true;
  return mpfr_cmpabs(mid_, rad_) <= 0;
}

Ball Ball::lower_point() const {
  Ball r(precision() + kRadiusPrec);
  mpfr_sub(r.mid_, mid_, rad_, MPFR_RNDD);
  return r;
}

Ball Ball::upper_point() const {
  Ball r(precision() + kRadiusPrec);
  mpfr_add(r.mid_, mid_, rad_, MPFR_RNDU);
  return r;
}

Ball Ball::mid_point() const {
  Ball r(precision());
  mpfr_set(r.mid_, mid_, MPFR_RNDN);
  return r;
}

namespace {

std::string mpfr_to_decimal(mpfr_srcptr x) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t e;
  char* digits = mpfr_get_str(nullptr, &e, 10, 0, x, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);
  std::string sign;
  if (d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  // value = 0.<digits> * 10^e
  return sign + "0." + d + "e" + std::to_string(static_cast<long>(e));
}

}  // namespace

std::string Ball::mid_string() const { return mpfr_to_decimal(mid_); }
std::string Ball::rad_string() const { return mpfr_to_decimal(rad_); }

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(join_prec(a, b));
  int t = mpfr_add(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad(), a.rad(), b.rad(), MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(join_prec(a, b));
  int t = mpfr_sub(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad(), a.rad(), b.rad(), MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(join_prec(a, b));
  int t = mpfr_mul(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  Raw am(Ball::kRadiusPrec), bm(Ball::kRadiusPrec), term(Ball::kRadiusPrec);
  abs_up(am, a.mid());
  abs_up(bm, b.mid());
  mpfr_mul(r.rad(), am, b.rad(), MPFR_RNDU);
  mpfr_mul(term, bm, a.rad(), MPFR_RNDU);
  mpfr_add(r.rad(), r.rad(), term, MPFR_RNDU);
  mpfr_mul(term, a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(r.rad(), r.rad(), term, MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (mpfr_nan_p(b.mid()) || mpfr_cmpabs(b.mid(), b.rad()) <= 0)
    throw domain_error("division by a ball containing zero");
  Ball r(join_prec(a, b));
  int t = mpfr_div(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
  Raw am(Ball::kRadiusPrec), bm_u(Ball::kRadiusPrec), bm_d(Ball::kRadiusPrec);
  Raw num(Ball::kRadiusPrec), den(Ball::kRadiusPrec), term(Ball::kRadiusPrec);
  abs_up(am, a.mid());
  abs_up(bm_u, b.mid());
  mpfr_mul(num, am, b.rad(), MPFR_RNDU);
  mpfr_mul(term, bm_u, a.rad(), MPFR_RNDU);
  mpfr_add(num, num, term, MPFR_RNDU);
  mpfr_set(bm_d, b.mid(), MPFR_RNDZ);
  mpfr_abs(bm_d, bm_d, MPFR_RNDD);
  mpfr_sub(den, bm_d, b.rad(), MPFR_RNDD);
  if (mpfr_sgn(den) <= 0) {
    mpfr_set_inf(r.rad(), 1);
    return r;
  }
  mpfr_mul(den, den, bm_d, MPFR_RNDD);
  mpfr_div(term, num, den, MPFR_RNDU);
  mpfr_set(r.rad(), term, MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball operator-(const Ball& a) {
  Ball r(a.precision());
  mpfr_neg(r.mid(), a.mid(), MPFR_RNDN);
  mpfr_set(r.rad(), a.rad(), MPFR_RNDU);
  return r;
}

Ball abs(const Ball& x) {
  Ball r(x.precision());
  mpfr_abs(r.mid(), x.mid(), MPFR_RNDN);
  mpfr_set(r.rad(), x.rad(), MPFR_RNDU);
  return r;
}

Ball exp(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_exp(r.mid(), x.mid(), MPFR_RNDN);
  if (!mpfr_zero_p(x.rad())) {
    // |exp(v) - exp(mid)| <= exp(mid) (e^rad - 1) for v in the ball
    Raw em1(Ball::kRadiusPrec), m_up(Ball::kRadiusPrec);
    mpfr_expm1(em1, x.rad(), MPFR_RNDU);
    mpfr_set(m_up, r.mid(), MPFR_RNDU);
    mpfr_nextabove(m_up);  // covers exp(mid) <= mid-result + 1/2 ulp
    mpfr_mul(em1, em1, m_up, MPFR_RNDU);
    mpfr_set(r.rad(), em1, MPFR_RNDU);
  }
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball log(const Ball& x) {
  if (mpfr_nan_p(x.mid()) || mpfr_sgn(x.mid()) <= 0 ||
      mpfr_cmpabs(x.mid(), x.rad()) <= 0)
    throw domain_error("log of a ball not strictly positive");
  Ball r(x.precision());
  int t = mpfr_log(r.mid(), x.mid(), MPFR_RNDN);
  if (!mpfr_zero_p(x.rad())) {
    // |log(v) - log(mid)| <= log1p(rad / (mid - rad))
    Raw d(x.precision()), q(Ball::kRadiusPrec);
    mpfr_sub(d, x.mid(), x.rad(), MPFR_RNDD);
    mpfr_div(q, x.rad(), d, MPFR_RNDU);
    mpfr_log1p(q, q, MPFR_RNDU);
    mpfr_set(r.rad(), q, MPFR_RNDU);
  }
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball sqrt(const Ball& x) {
  if (mpfr_nan_p(x.mid()) || mpfr_sgn(x.mid()) < 0 ||
      mpfr_cmpabs(x.mid(), x.rad()) < 0)
    throw domain_error("sqrt of a ball not nonnegative");
  Ball r(x.precision());
  int t = mpfr_sqrt(r.mid(), x.mid(), MPFR_RNDN);
  if (!mpfr_zero_p(x.rad())) {
    Raw lo(x.precision()), slo(Ball::kRadiusPrec);
    mpfr_sub(lo, x.mid(), x.rad(), MPFR_RNDD);
    if (mpfr_sgn(lo) > 0) {
      // sqrt(mid) - sqrt(mid - rad) = rad / (sqrt(mid) + sqrt(mid - rad))
      mpfr_sqrt(slo, lo, MPFR_RNDD);
      mpfr_mul_2ui(slo, slo, 1, MPFR_RNDD);
      mpfr_div(slo, x.rad(), slo, MPFR_RNDU);
      mpfr_set(r.rad(), slo, MPFR_RNDU);
    } else {
      // interval may reach 0: bound by sqrt(mid + rad)
      Raw hi(x.precision());
      mpfr_add(hi, x.mid(), x.rad(), MPFR_RNDU);
      mpfr_sqrt(slo, hi, MPFR_RNDU);
      mpfr_set(r.rad(), slo, MPFR_RNDU);
    }
  }
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball pow_int(const Ball& x, long k) {
  if (k == 0) return Ball::exact(1L, x.precision());
  if (k < 0) return Ball::exact(1L, x.precision()) / pow_int(x, -k);
  Ball acc = Ball::exact(1L, x.precision());
  Ball base = x;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

Ball pow_ratio(const Ball& x, const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return pow_int(x, q.get_num().get_si());
  return exp(Ball::of_rational(q, x.precision()) * log(x));
}

Ball max(const Ball& a, const Ball& b) {
  mpfr_prec_t p = join_prec(a, b);
  Raw lo_a(p + Ball::kRadiusPrec), lo_b(p + Ball::kRadiusPrec);
  Raw hi_a(p + Ball::kRadiusPrec), hi_b(p + Ball::kRadiusPrec);
  mpfr_sub(lo_a, a.mid(), a.rad(), MPFR_RNDD);
  mpfr_sub(lo_b, b.mid(), b.rad(), MPFR_RNDD);
  mpfr_add(hi_a, a.mid(), a.rad(), MPFR_RNDU);
  mpfr_add(hi_b, b.mid(), b.rad(), MPFR_RNDU);
  mpfr_max(lo_a, lo_a, lo_b, MPFR_RNDD);
  mpfr_max(hi_a, hi_a, hi_b, MPFR_RNDU);
  return Ball::from_endpoints(lo_a, hi_a, p);
}

Ball mul_2si(const Ball& x, long k) {
  Ball r(x.precision());
  mpfr_mul_2si(r.mid(), x.mid(), k, MPFR_RNDN);
  mpfr_mul_2si(r.rad(), x.rad(), k, MPFR_RNDU);
  return r;
}

Ball mul_z(const Ball& x, const mpz_class& z) {
  Ball r(x.precision());
  int t = mpfr_mul_z(r.mid(), x.mid(), z.get_mpz_t(), MPFR_RNDN);
  Raw zb(Ball::kRadiusPrec);
  mpfr_set_z(zb, z.get_mpz_t(), MPFR_RNDA);
  mpfr_abs(zb, zb, MPFR_RNDU);
  mpfr_mul(r.rad(), x.rad(), zb, MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball sub_z(const Ball& x, const mpz_class& z) {
  Ball r(x.precision());
  int t = mpfr_sub_z(r.mid(), x.mid(), z.get_mpz_t(), MPFR_RNDN);
  mpfr_set(r.rad(), x.rad(), MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball sub_q(const Ball& x, const mpq_class& q) {
  Ball r(x.precision());
  int t = mpfr_sub_q(r.mid(), x.mid(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_set(r.rad(), x.rad(), MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Ball log_z(const mpz_class& n, mpfr_prec_t prec) {
  if (n < 1) throw domain_error("log_z requires n >= 1");
  return log(Ball::exact(n, prec));
}

Ball round_to(const Ball& x, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_set(r.mid(), x.mid(), MPFR_RNDN);
  mpfr_set(r.rad(), x.rad(), MPFR_RNDU);
  absorb_rounding(r.rad(), r.mid(), t);
  return r;
}

Sign certify_sign(const Ball& x) {
  if (mpfr_nan_p(x.mid()) || mpfr_nan_p(x.rad())) return Sign::undecided;
  if (mpfr_cmpabs(x.mid(), x.rad()) <= 0) return Sign::undecided;
  return mpfr_sgn(x.mid()) > 0 ? Sign::positive : Sign::negative;
}

bool certainly_positive(const Ball& x) { return certify_sign(x) == Sign::positive; }
bool certainly_negative(const Ball& x) { return certify_sign(x) == Sign::negative; }

bool certainly_less(const Ball& a, const Ball& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  mpfr_prec_t p = join_prec(a, b) + Ball::kRadiusPrec;
  Raw sup_a(p), inf_b(p);
  mpfr_add(sup_a, a.mid(), a.rad(), MPFR_RNDU);
  mpfr_sub(inf_b, b.mid(), b.rad(), MPFR_RNDD);
  return mpfr_cmp(sup_a, inf_b) < 0;
}

bool certainly_leq(const Ball& a, const Ball& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  mpfr_prec_t p = join_prec(a, b) + Ball::kRadiusPrec;
  Raw sup_a(p), inf_b(p);
  mpfr_add(sup_a, a.mid(), a.rad(), MPFR_RNDU);
  mpfr_sub(inf_b, b.mid(), b.rad(), MPFR_RNDD);
  return mpfr_cmp(sup_a, inf_b) <= 0;
}

bool certainly_less_q(const Ball& x, const mpq_class& q) {
  if (!x.is_finite()) return false;
  Raw sup(x.precision() + Ball::kRadiusPrec);
  mpfr_add(sup, x.mid(), x.rad(), MPFR_RNDU);
  return mpfr_cmp_q(sup, q.get_mpq_t()) < 0;
}

bool certainly_greater_q(const Ball& x, const mpq_class& q) {
  if (!x.is_finite()) return false;
  Raw inf(x.precision() + Ball::kRadiusPrec);
  mpfr_sub(inf, x.mid(), x.rad(), MPFR_RNDD);
  return mpfr_cmp_q(inf, q.get_mpq_t()) > 0;
}

bool contains_q(const Ball& x, const mpq_class& q) {
  if (mpfr_nan_p(x.mid())) return false;
  if (mpfr_inf_p(x.rad())) return true;
  if (mpfr_inf_p(x.mid())) return false;
  mpq_class m, r;
  mpfr_get_q(m.get_mpq_t(), x.mid());
  mpfr_get_q(r.get_mpq_t(), x.rad());
  mpq_class d = m - q;
  if (d < 0) d = -d;
  return d <= r;
}

bool overlaps(const Ball& a, const Ball& b) {
  return !certainly_less(a, b) && !certainly_less(b, a);
}

bool contains(const Ball& outer, const Ball& inner) {
  if (!outer.is_finite()) return mpfr_inf_p(outer.rad()) != 0;
  if (!inner.is_finite()) return false;
  mpfr_prec_t p = join_prec(outer, inner) + Ball::kRadiusPrec;
  Raw lo_o(p), hi_o(p), lo_i(p), hi_i(p);
  mpfr_sub(lo_o, outer.mid(), outer.rad(), MPFR_RNDD);
  mpfr_add(hi_o, outer.mid(), outer.rad(), MPFR_RNDU);
  mpfr_sub(lo_i, inner.mid(), inner.rad(), MPFR_RNDD);
  mpfr_add(hi_i, inner.mid(), inner.rad(), MPFR_RNDU);
  return mpfr_cmp(lo_o, lo_i) <= 0 && mpfr_cmp(hi_i, hi_o) <= 0;
}

std::optional<mpz_class> nearest_integer(const Ball& x) {
  if (!x.is_finite()) return std::nullopt;
  mpz_class m;
  mpfr_get_z(m.get_mpz_t(), x.mid(), MPFR_RNDN);
  mpq_class lo(2 * m - 1, 2), hi(2 * m + 1, 2);  // odd/2: already canonical
  if (certainly_greater_q(x, lo) && certainly_less_q(x, hi)) return m;
  return std::nullopt;
}

std::optional<mpz_class> ceil_integer(const Ball& x) {
  if (!x.is_finite()) return std::nullopt;
  Raw lo(x.precision() + Ball::kRadiusPrec), hi(x.precision() + Ball::kRadiusPrec);
  mpfr_sub(lo, x.mid(), x.rad(), MPFR_RNDD);
  mpfr_add(hi, x.mid(), x.rad(), MPFR_RNDU);
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDU);
  if (a == b) return a;
  return std::nullopt;
}

std::optional<mpz_class> floor_integer(const Ball& x) {
  if (!x.is_finite()) return std::nullopt;
  Raw lo(x.precision() + Ball::kRadiusPrec), hi(x.precision() + Ball::kRadiusPrec);
  mpfr_sub(lo, x.mid(), x.rad(), MPFR_RNDD);
  mpfr_add(hi, x.mid(), x.rad(), MPFR_RNDU);
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);
  if (a == b) return a;
  return std::nullopt;
}

}  // namespace ratexp
