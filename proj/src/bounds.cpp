#include "ratexp/bounds.hpp"

#include <algorithm>

#include "ratexp/zsolve.hpp"

namespace ratexp {
namespace {

Ball abs_s_ball(const ArithmeticProfile& pr, mpfr_prec_t p) {
  return Ball::exact(mpz_class(::abs(pr.s)), p);
}

Ball exp_minus_one_abs(const ArithmeticProfile& pr, mpfr_prec_t p) {
  RationalExponent arg(pr.s, pr.t);
  return abs(sub_z(exp_st(arg, p), 1));
}

}  // namespace

Ball zeta_of(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  Ball y = pr.sigma * logN;
  if (!certainly_less(Ball::e(p), y))
    throw domain_error("zeta_of requires sigma log N > e");
  Ball z = xi_inverse(y, p);
  return z / pr.sigma + Ball::exact(static_cast<long>(pr.beta), p);
}

Ball big_Z(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  Ball zeta = zeta_of(pr, logN, p);
  long beta = static_cast<long>(pr.beta);
  Ball alpha = exp(pr.alpha_log);
  Ball s2 = Ball::exact(mpz_class(pr.s * pr.s), p);
  Ball front = pow_int(s2 / (alpha * alpha) * (zeta + Ball::exact(1L, p)), beta);
  Ball gamma = Ball::exact(pr.gamma, p);
  Ball term1 = Ball::exact(8L, p) * gamma * gamma * abs_s_ball(pr, p) *
               (mul_z(zeta, 4 * pr.t) + Ball::exact(mpz_class(6 * pr.t + pr.s * pr.s), p)) *
               pow_int(zeta, beta) / alpha;
  Ball term2 = Ball::exact(static_cast<long>(pr.gcd2), p) * alpha * alpha * gamma /
               (exp(mul_2si(logN, 1)) * s2 * exp_minus_one_abs(pr, p));
  return front * (term1 + term2);
}

Ball exponent_mu(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  if (pr.excess_zero) return Ball::exact(2L, p);
  Ball y = pr.sigma * logN;
  Ball z = xi_inverse(y, p);
  return Ball::exact(2L, p) + mul_2si(pr.log_s_over_alpha, 1) * z / y;
}

std::pair<Ball, Ball> threshold_log_N1_terms(const ArithmeticProfile& pr,
                                             mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  Ball beta = Ball::exact(static_cast<long>(pr.beta), p);
  Ball em = round_to(pr.eta, p) - beta;
  Ball first = em * log(round_to(pr.sigma, p) * em);
  Ball denom = abs(Ball::exact(mpz_class(4 * pr.s), p) +
                   Ball::exact(mpz_class(2 * (pr.s - 2 * pr.t)), p) *
                       sub_z(exp_st(RationalExponent(pr.s, pr.t), p), 1));
  Ball second = log(Ball::exact(static_cast<long>(pr.gcd2), p) / denom);
  return {first, second};
}

Ball threshold_log_N1(const ArithmeticProfile& pr, mpfr_prec_t precision_bits) {
  auto [first, second] = threshold_log_N1_terms(pr, precision_bits);
  return max(first, second);
}

Ball epsilon_of(const Ball& logN, mpfr_prec_t precision_bits) {
  Ball ll = log(round_to(logN, precision_bits));
  return log(ll) / ll;
}

Corollary2Constants corollary2_constants(const ArithmeticProfile& pr,
                                         mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  long beta = static_cast<long>(pr.beta);
  Ball logN2 = threshold_log_N1(pr, p);
  Ball e = Ball::e(p);
  logN2 = max(logN2, exp(mul_z(e, 4)));                    // e^{4e}
  logN2 = max(logN2, pow_int(round_to(pr.sigma, p), -2));  // sigma^{-2}
  logN2 = max(logN2, Ball::exact(mpz_class(pr.beta * pr.beta), p));
  if (!pr.excess_zero) {
    Ball last = round_to(pr.rho, p) * Ball::exact(2 * beta + 1, p) /
                mul_2si(round_to(pr.log_s_over_alpha, p), 1);
    logN2 = max(logN2, pow_ratio(last, mpq_class(4, 3)));
  }
  Ball d = Ball::exact(1L, p) /
           (pow_ratio(logN2, mpq_class(1, 4)) / round_to(pr.sigma, p) +
            Ball::exact(beta, p));
  Ball alpha = exp(pr.alpha_log);
  Ball gamma = Ball::exact(pr.gamma, p);
  Ball abs_s = abs_s_ball(pr, p);
  Ball one = Ball::exact(1L, p);
  Ball c2a = Ball::exact(8L, p) * gamma * gamma * pow_int(abs_s, 2 * beta + 1) *
             pow_int(one + d, beta) *
             (Ball::exact(mpz_class(4 * pr.t), p) +
              d * Ball::exact(mpz_class(6 * pr.t + pr.s * pr.s), p)) /
             pow_int(alpha, 2 * beta + 1);
  Ball s_ball = Ball::exact(pr.s, p);
  Ball c2b = Ball::exact(static_cast<long>(pr.gcd2), p) * gamma *
             pow_int(s_ball, 2 * (beta - 1)) * d * pow_int(d + d * d, beta) /
             (exp(mul_2si(logN2, 1)) * pow_int(alpha, 2 * (beta - 1)) *
              exp_minus_one_abs(pr, p));
  return {c2a + c2b, d, logN2};
}

Ball corollary3_exponent(const ArithmeticProfile& pr, const Ball& logN, long n,
                         const Ball& c3, const Ball& eps3, mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  if (n < 1) throw domain_error("corollary3_exponent requires n >= 1");
  Ball two = Ball::exact(2L, p);
  Ball excess = mul_2si(round_to(pr.log_s_over_alpha, p), 1);
  Ball ll = log(round_to(logN, p));
  if (n == 1) {
    Ball eps = epsilon_of(logN, p);
    Ball one = Ball::exact(1L, p);
    return two + excess * (one + (one + eps3) * eps) / ll;
  }
  Ball zn1 = zn_iterate(round_to(logN, p), n - 1, p);
  return two + excess * (Ball::exact(1L, p) / log(zn1) + c3 / (ll * ll));
}

Corollary4Bound corollary4_bound(const Ball& logN, mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  Ball threshold = Ball::exact(983L, p);
  if (!certainly_leq(threshold, logN))
    throw domain_error("corollary4_bound requires log N >= 983");
  Corollary4Bound out;
  Ball ll = log(round_to(logN, p));
  Ball eps = epsilon_of(logN, p);
  out.exponent = Ball::exact(2L, p) +
                 log(Ball::exact(3L, p)) *
                     (Ball::exact(1L, p) + mul_2si(eps, 2)) / ll;
  out.polylog = pow_int(round_to(logN, p) / ll, 3);
  return out;
}

CompetitorExponents competitor_exponents(const ArithmeticProfile& pr, const Ball& logN,
                                         const Ball& bundschuh_delta, const Ball& zheng_eps,
                                         mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  Ball log_s = log(abs_s_ball(pr, p));
  Ball L = round_to(logN, p);
  Ball two = Ball::exact(2L, p);
  CompetitorExponents out;
  Ball shifted = L + bundschuh_delta;
  Ball w = shifted / log(shifted);
  out.bundschuh = two + mul_2si(log_s, 2) * w / L;
  Ball tau = Ball::exact(mpz_class(4 * pr.t), p) /
             (Ball::e(p) * Ball::exact(mpz_class(pr.s * pr.s), p));
  Ball y = tau * L;
  out.shiokawa = two + mul_2si(log_s, 1) * xi_inverse(y, p) / y;
  out.zheng = two + (two + zheng_eps) * log_s / log(L);
  return out;
}

BoundReport bound_report(const ArithmeticProfile& pr, const Ball& logN,
                         mpfr_prec_t precision_bits) {
  mpfr_prec_t p = precision_bits;
  BoundReport r;
  r.s = pr.s;
  r.t = pr.t;
  r.precision = p;
  r.logN = round_to(logN, p);
  r.zeta = zeta_of(pr, logN, p);
  r.bigZ = big_Z(pr, logN, p);
  r.mu = exponent_mu(pr, logN, p);
  r.log_lower_bound = -(log(r.bigZ) + r.mu * r.logN);
  r.threshold_ok = certainly_leq(threshold_log_N1(pr, p), logN);
  return r;
}

}  // namespace ratexp
