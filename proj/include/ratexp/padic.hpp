#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ratexp/ball.hpp"
#include "ratexp/errors.hpp"

namespace ratexp {

// The pair (s, t) defining e^{s/t}. Construction enforces s != 0, t >= 1 and
// gcd(|s|, t) = 1, so every consumer may assume a valid argument.
struct RationalExponent {
  mpz_class s;
  mpz_class t;
  RationalExponent(mpz_class s_, mpz_class t_);
};

// Exact prime factorization, ascending by prime. Trial division: intended for
// small user inputs (practical limit well below 2^63).
struct PrimeFactorization {
  std::vector<std::pair<mpz_class, unsigned long>> factors;
};

PrimeFactorization factorize(const mpz_class& n);  // n >= 1; 1 -> empty list
bool is_prime(const mpz_class& p);                 // deterministic trial division

// p-adic order of n; infinite exactly for n = 0.
struct PadicOrder {
  bool infinite = false;
  unsigned long value = 0;
  static PadicOrder inf() { return {true, 0}; }
  static PadicOrder finite(unsigned long v) { return {false, v}; }
  friend bool operator==(const PadicOrder&, const PadicOrder&) = default;
};

PadicOrder vp(const mpz_class& n, const mpz_class& p);  // n >= 0, p prime
unsigned long digit_sum(unsigned long n, unsigned long p);
// Prime-power order of n! without computing n!: (n - digit_sum(n, p)) / (p - 1).
unsigned long vp_factorial(unsigned long n, unsigned long p);

// The common divisor D_n = prod_{p | s} p^{r_p(n)} of the shifted convergent
// numerators, with r_2(n) = n + 1 and r_p(n) = v_p((n+1)!) for odd p.
mpz_class big_divisor(long n, const mpz_class& s);

mpz_class zpow(const mpz_class& base, unsigned long e);

// Derived arithmetic constants of the pair (s, t).
struct ArithmeticProfile {
  mpz_class s;
  mpz_class t;
  PrimeFactorization s_factors;  // of |s|
  unsigned long beta = 0;        // number of odd primes dividing s
  mpz_class gamma = 1;           // product of odd primes dividing s
  int gcd2 = 1;                  // gcd(2, s)
  mpfr_prec_t precision = Ball::kMinPrec;
  Ball alpha_log;         // sum of log(p)/(p-1) over p | s; exact 0 for |s| = 1
  Ball alpha;             // prod p^{1/(p-1)} = exp(alpha_log)
  Ball sigma;             // 4 t alpha / (e s^2)
  Ball rho;               // 7/3 if sigma >= 1, else 5 - 2 log(sigma)
  Ball eta;
  Ball exp_value;         // e^{s/t}
  Ball log_s_over_alpha;  // log(|s|) - alpha_log; exact 0 for |s| in {1, 2}
  bool excess_zero = false;  // |s| in {1, 2}: the exponent excess vanishes
};

ArithmeticProfile arithmetic_profile(const RationalExponent& arg, mpfr_prec_t precision_bits);

// e^{s/t} with radius at most 2^(2-precision) * e^(|s|/t).
Ball exp_st(const RationalExponent& arg, mpfr_prec_t precision_bits);

}  // namespace ratexp
