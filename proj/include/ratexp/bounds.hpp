#pragma once

#include "ratexp/ball.hpp"
#include "ratexp/padic.hpp"

namespace ratexp {

// zeta(N) = z(sigma log N) / sigma + beta. Requires sigma log N > e.
Ball zeta_of(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits);

// The bound factor
//   Z(N) = ((s^2/alpha^2)(zeta+1))^beta
//          * (8 gamma^2 |s| (4 t zeta + 6 t + s^2) zeta^beta / alpha
//             + gcd(2,s) alpha^2 gamma / (N^2 s^2 |e^{s/t}-1|)),
// with 1/N^2 evaluated as exp(-2 log N).
Ball big_Z(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits);

// Full exponent mu = 2 + 2 log(|s|/alpha) z(sigma log N)/(sigma log N); the
// exact ball 2 when |s| <= 2 (the excess coefficient vanishes identically).
Ball exponent_mu(const ArithmeticProfile& pr, const Ball& logN, mpfr_prec_t precision_bits);

// Smallest log N for which the certified lower bound is claimed:
//   max( (eta-beta) log(sigma (eta-beta)),
//        log( gcd(2,s) / |4s + 2(s-2t)(e^{s/t}-1)| ) ).
Ball threshold_log_N1(const ArithmeticProfile& pr, mpfr_prec_t precision_bits);
// The two max-arguments, for inspection.
std::pair<Ball, Ball> threshold_log_N1_terms(const ArithmeticProfile& pr,
                                             mpfr_prec_t precision_bits);

// epsilon(N) = logloglog N / loglog N.
Ball epsilon_of(const Ball& logN, mpfr_prec_t precision_bits);

// Constants of the elementary-function form of the bound: d, log N2 and the
// constant c2 multiplying N^exponent (log N / loglog N)^(2 beta + 1).
// The (rho(2beta+1)/(2 log(|s|/alpha)))^(4/3) entry of the log N2 max is
// degenerate when |s| <= 2 (the excess is identically zero) and is omitted.
struct Corollary2Constants {
  Ball c2;
  Ball d;
  Ball logN2;
};
Corollary2Constants corollary2_constants(const ArithmeticProfile& pr,
                                         mpfr_prec_t precision_bits);

// Asymptotic exponent built from the n-th nested-log iterate:
//   n = 1:  2 + 2 log(|s|/alpha) (1 + (1+eps3) epsilon(N)) / loglog N
//   n >= 2: 2 + 2 log(|s|/alpha) (1/log z_{n-1}(log N) + c3/(loglog N)^2).
// c3 and eps3 are caller-supplied.
Ball corollary3_exponent(const ArithmeticProfile& pr, const Ball& logN, long n,
                         const Ball& c3, const Ball& eps3, mpfr_prec_t precision_bits);

// Specialized bound for s = 3, t = 1, valid for log N >= 983:
//   |e^3 - M/N| * 1561 * N^exponent * (log N / loglog N)^3 > 1,
//   exponent = 2 + log 3 (1 + 4 epsilon(N)) / loglog N.
struct Corollary4Bound {
  long factor = 1561;
  Ball exponent;
  Ball polylog;  // (log N / loglog N)^3
};
Corollary4Bound corollary4_bound(const Ball& logN, mpfr_prec_t precision_bits);

// Exponents of previously published bounds, for side-by-side comparison.
// Bundschuh's delta and Zheng's epsilon are not reproduced here and must be
// supplied by the caller.
struct CompetitorExponents {
  Ball bundschuh;  // 2 + 4 log|s| w(log N)/log N, w(x) = (x+delta)/log(x+delta)
  Ball shiokawa;   // 2 + 2 log|s| z(tau log N)/(tau log N), tau = 4t/(e s^2)
  Ball zheng;      // 2 + (2 + eps_Z) log|s| / loglog N
};
CompetitorExponents competitor_exponents(const ArithmeticProfile& pr, const Ball& logN,
                                         const Ball& bundschuh_delta, const Ball& zheng_eps,
                                         mpfr_prec_t precision_bits);

// Everything needed to state the lower bound at one N:
//   |e^{s/t} - M/N| > exp(log_lower_bound), log_lower_bound = -log Z - mu log N.
struct BoundReport {
  mpz_class s, t;
  Ball logN;
  Ball zeta;
  Ball bigZ;
  Ball mu;
  Ball log_lower_bound;
  bool threshold_ok = false;
  mpfr_prec_t precision = Ball::kMinPrec;
};
BoundReport bound_report(const ArithmeticProfile& pr, const Ball& logN,
                         mpfr_prec_t precision_bits);

}  // namespace ratexp
