#include "ratexp/zsolve.hpp"

#include <algorithm>

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

// Non-rigorous midpoint solve of z log z = y, z >= 1/e. Newton where the
// derivative log z + 1 is healthy (y > e), bisection on [1/e, e] otherwise.
void solve_mid(mpfr_ptr z, mpfr_srcptr y, mpfr_prec_t wp) {
  Raw e_up(wp), f(wp), df(wp), step(wp), lz(wp);
  mpfr_set_ui(e_up, 1, MPFR_RNDN);
  mpfr_exp(e_up, e_up, MPFR_RNDN);
  if (mpfr_cmp(y, e_up) > 0) {
    // initial guess z_2(y) = y / log(y / log y)
    Raw ly(wp);
    mpfr_log(ly, y, MPFR_RNDN);
    mpfr_div(z, y, ly, MPFR_RNDN);
    mpfr_log(lz, z, MPFR_RNDN);
    mpfr_div(z, y, lz, MPFR_RNDN);
    for (int it = 0; it < 400; ++it) {
      mpfr_log(lz, z, MPFR_RNDN);
      mpfr_mul(f, z, lz, MPFR_RNDN);
      mpfr_sub(f, f, y, MPFR_RNDN);
      mpfr_add_ui(df, lz, 1, MPFR_RNDN);
      mpfr_div(step, f, df, MPFR_RNDN);
      mpfr_sub(z, z, step, MPFR_RNDN);
      if (mpfr_zero_p(step)) break;
      // stop once |step| <= |z| 2^(8-wp)
      Raw tol(Ball::kRadiusPrec);
      mpfr_abs(tol, z, MPFR_RNDD);
      mpfr_mul_2si(tol, tol, 8 - static_cast<long>(wp), MPFR_RNDD);
      if (mpfr_cmpabs(step, tol) <= 0) break;
    }
    return;
  }
  // bisection bracket [1/e, e]
  Raw lo(wp), hi(wp), mid(wp);
  mpfr_ui_div(lo, 1, e_up, MPFR_RNDD);
  mpfr_set(hi, e_up, MPFR_RNDU);
  for (mpfr_prec_t it = 0; it < wp + 16; ++it) {
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_log(lz, mid, MPFR_RNDN);
    mpfr_mul(f, mid, lz, MPFR_RNDN);
    if (mpfr_cmp(f, y) <= 0)
      mpfr_set(lo, mid, MPFR_RNDN);
    else
      mpfr_set(hi, mid, MPFR_RNDN);
  }
  mpfr_set(z, lo, MPFR_RNDN);
}

// Certified f(pt) < y_bound (dir < 0) or f(pt) > y_bound (dir > 0) where
// f(z) = z log z and pt, y_bound are exact points.
bool certify_side(const Ball& pt, const Ball& y_bound, int dir, mpfr_prec_t wp) {
  Ball v = round_to(pt, wp);
  Ball f = v * log(v);
  return dir < 0 ? certainly_less(f, y_bound) : certainly_less(y_bound, f);
}

}  // namespace

Ball xi_inverse(const Ball& y, mpfr_prec_t precision_bits) {
  if (!y.is_finite()) throw domain_error("xi_inverse: y must be finite");
  mpfr_prec_t p = std::max<mpfr_prec_t>(precision_bits, Ball::kMinPrec);

  for (mpfr_prec_t wp = p + 64;; wp = std::min<mpfr_prec_t>(wp * 2, Ball::kMaxPrec)) {
    Ball inv_e = Ball::exact(1L, wp) / Ball::e(wp);
    Ball shifted = y + inv_e;  // y - (-1/e)
    Sign s = certify_sign(shifted);
    if (s == Sign::negative) throw domain_error("xi_inverse: y below -1/e");
    if (s == Sign::undecided) {
      if (wp >= 4 * (p + 64) || wp >= Ball::kMaxPrec) {
        // ball touches the branch point: quadratic enclosure around z = 1/e.
        // On [1/e, 1/e + h]: y(z) + 1/e >= h^2 / (2 (1/e + h)), so
        // h = sqrt(2 d (1/e + 1)) covers every d <= 1 above the branch point.
        Ball d = max(shifted, Ball(wp)).upper_point();
        Ball h = sqrt(mul_2si(d * (inv_e + Ball::exact(1L, wp)), 1));
        Ball lo = inv_e.lower_point();
        Ball hi = (inv_e + h).upper_point();
        return round_to(Ball::from_endpoints(lo.mid(), hi.mid(), p + 64), p);
      }
      continue;
    }

    Ball ylo = y.lower_point();
    Ball yhi = y.upper_point();
    Raw zl(wp), zu(wp);
    solve_mid(zl, ylo.mid(), wp);
    if (y.is_exact())
      mpfr_set(zu, zl, MPFR_RNDN);
    else
      solve_mid(zu, yhi.mid(), wp);

    // bracket [zl - delta, zu + delta], certified against the y endpoints
    Raw lo(wp), hi(wp), delta(wp);
    bool ok = false;
    mpfr_abs(delta, zl, MPFR_RNDU);
    mpfr_add_ui(delta, delta, 1, MPFR_RNDU);
    mpfr_mul_2si(delta, delta, -static_cast<long>(p) - 8, MPFR_RNDU);
    for (int widen = 0; widen < 4; ++widen) {
      mpfr_sub(lo, zl, delta, MPFR_RNDD);
      mpfr_add(hi, zu, delta, MPFR_RNDU);
      Ball inv_e_lo = inv_e.lower_point();
      bool lo_ok;
      if (mpfr_cmp(lo, inv_e_lo.mid()) <= 0) {
        // z >= 1/e always; a point at or below 1/e is a valid lower bound
        mpfr_set(lo, inv_e_lo.mid(), MPFR_RNDD);
        lo_ok = true;
      } else {
        Ball lo_pt(wp);
        mpfr_set(lo_pt.mid(), lo, MPFR_RNDN);
        lo_ok = certify_side(lo_pt, ylo, -1, wp);
      }
      Ball hi_pt(wp);
      mpfr_set(hi_pt.mid(), hi, MPFR_RNDN);
      bool hi_ok = certify_side(hi_pt, yhi, +1, wp);
      if (lo_ok && hi_ok) {
        ok = true;
        break;
      }
      mpfr_mul_2ui(delta, delta, 4, MPFR_RNDU);
    }
    if (!ok) {
      if (wp >= Ball::kMaxPrec) throw precision_exhausted("xi_inverse: bracket failed");
      continue;
    }

    Ball z = round_to(Ball::from_endpoints(lo, hi, wp), p);
    // residual contract on the returned midpoint, measured against the query
    // midpoint (the bracket already covers the spread of a non-exact y)
    Ball zm = round_to(z.mid_point(), wp);
    Ball res = abs(zm * log(zm) - y.mid_point());
    Ball tol = max(Ball::exact(1L, wp), abs(y));
    tol = mul_2si(tol, 1 - static_cast<long>(p));
    if (certainly_leq(res, tol)) return z;
    if (wp >= Ball::kMaxPrec)
      throw precision_exhausted("xi_inverse: residual contract not certifiable");
  }
}

Ball zn_iterate(const Ball& y, long n, mpfr_prec_t precision_bits) {
  if (n < 0) throw domain_error("zn_iterate requires n >= 0");
  Ball z = round_to(y, precision_bits);
  for (long k = 1; k <= n; ++k) {
    Ball lz;
    try {
      lz = log(z);
    } catch (const domain_error&) {
      throw domain_error("zn_iterate: intermediate iterate not strictly positive");
    }
    if (lz.contains_zero())
      throw domain_error("zn_iterate: intermediate log not strictly positive");
    z = y / lz;
  }
  return z;
}

Ball zn_error_bound(const Ball& y, long n, mpfr_prec_t precision_bits) {
  if (n < 0) throw domain_error("zn_error_bound requires n >= 0");
  mpfr_prec_t p = std::max<mpfr_prec_t>(precision_bits, Ball::kMinPrec);
  Ball e = Ball::e(p);
  if (!certainly_less(e, y)) throw domain_error("zn_error_bound requires y > e");
  Ball z = xi_inverse(y, p);
  Ball lz = log(z);
  if (n == 0) return y * (Ball::exact(1L, p) - Ball::exact(1L, p) / lz);
  Ball z1 = y / log(y);
  Ball llz = log(lz);
  if (n == 1) return z1 * llz / lz;
  long half = n / 2;
  Ball num = pow_int(log(y), half) * z1 * llz;
  Ball den = pow_int(log(z1), n - 1) * pow_int(lz, half + 1);
  return num / den;
}

}  // namespace ratexp
