#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ratexp/ball.hpp"
#include "ratexp/gcf.hpp"
#include "ratexp/padic.hpp"

namespace ratexp {

// One row of the specialized convergent table for e^{s/t}: the convergents
// A_n/B_n of E(s, t), the shifted numerators C± = A + (2t ± s) B, the common
// divisor D, and the reduced integers J = C+/D, H = C-/D.
struct ConvergentRow {
  long n = 0;
  mpz_class A, B, Cplus, Cminus, D, J, H;
};

// Coefficient stream of E(s, t): a_k = s^2, b_k = 2t(2k+1).
GcfTerms<mpz_class> exp_gcf_terms(const RationalExponent& arg);

// Rows 0..n_max. Throws internal_error if D fails to divide C+ or C- (which
// would mean the divisor construction is wrong).
std::vector<ConvergentRow> exp_cf_rows(const RationalExponent& arg, long n_max);

// Closed form sum_{k=0}^{n+1} (n+1+k)!/(k!(n+1-k)!) t^k (±s)^{n+1-k},
// returned as (C+, C-).
std::pair<mpz_class, mpz_class> cpm_closed_form(const RationalExponent& arg, long n);

// J_n H_{n+1} - J_{n+1} H_n - (-1)^n 2 s^{2n+3} / (D_n D_{n+1}) as an exact
// rational; the identity says this is exactly zero.
mpq_class determinant_residual(const std::vector<ConvergentRow>& rows, long n);

// E(s, t) evaluated from a high-precision exponential:
//   E(s, t) = 2s/(e^{s/t} - 1) + s - 2t.
// Independent of the convergent recurrence.
Ball exp_cf_value(const RationalExponent& arg, mpfr_prec_t precision_bits);

// Linear forms R_n = B_n E(s,t) - A_n and L_n = (1 - e^{s/t}) R_n / D_n.
struct LinearFormSample {
  long n = 0;
  Ball R;
  Ball L;
};

// Samples for n = 0..n_max with two certificates per row: the alternating
// tail estimate |R_n| < s^{2(n+1)} / B_{n+1} and containment of zero in
// (1 - e^{s/t}) R_n - (C- e^{s/t} - C+). Starts at
// max(precision_bits, 256, 4 (n_max+1) log2|s| + 64) bits and doubles on a
// certification failure up to max_precision.
std::vector<LinearFormSample> linear_forms(const RationalExponent& arg, long n_max,
                                           mpfr_prec_t precision_bits,
                                           mpfr_prec_t max_precision = Ball::kMaxPrec);

// The fraction C+_n / C-_n = 1 + 2s/(2t - s + A_n/B_n) in lowest terms; these
// are the rational approximations the convergents induce for e^{s/t}.
// C-_n must be nonzero.
mpq_class induced_fraction(const ConvergentRow& row);

}  // namespace ratexp
