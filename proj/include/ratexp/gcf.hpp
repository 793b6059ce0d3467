#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "ratexp/ball.hpp"
#include "ratexp/errors.hpp"

namespace ratexp {

// Coefficient stream of a generalized continued fraction
//   b0 + a1/(b1 + a2/(b2 + ...)).
// The closures must be deterministic (same k, same value) and a(k) must be
// nonzero for every generated k >= 1. T is an exact type (mpz_class or
// mpq_class).
template <typename T>
struct GcfTerms {
  T b0;
  std::function<T(long)> a;  // partial numerators, k >= 1
  std::function<T(long)> b;  // partial denominators, k >= 1
};

template <typename T>
struct Convergent {
  long n = 0;
  T A;  // numerator
  T B;  // denominator
};

// Convergents 0..n_max via the three-term recurrence
//   C_n = b_n C_{n-1} + a_n C_{n-2},
// with A_0 = b0, B_0 = 1, A_1 = b0 b1 + a1, B_1 = b1.
template <typename T>
std::vector<Convergent<T>> gcf_convergents(const GcfTerms<T>& f, long n_max) {
  if (n_max < 0) throw domain_error("gcf_convergents: n_max must be >= 0");
  std::vector<Convergent<T>> rows;
  rows.reserve(static_cast<size_t>(n_max) + 1);
  rows.push_back({0, f.b0, T(1)});
  if (n_max == 0) return rows;
  T a1 = f.a(1);
  if (a1 == 0) throw domain_error("gcf_convergents: zero partial numerator at k=1");
  T b1 = f.b(1);
  rows.push_back({1, T(f.b0 * b1 + a1), b1});
  for (long n = 2; n <= n_max; ++n) {
    T an = f.a(n);
    if (an == 0) throw domain_error("gcf_convergents: zero partial numerator");
    T bn = f.b(n);
    T A = bn * rows[n - 1].A + an * rows[n - 2].A;
    T B = bn * rows[n - 1].B + an * rows[n - 2].B;
    rows.push_back({n, std::move(A), std::move(B)});
  }
  return rows;
}

namespace detail {

template <typename T>
void require_positive_terms(const GcfTerms<T>& f, long k_max) {
  for (long k = 1; k <= k_max; ++k) {
    if (f.a(k) <= 0 || f.b(k) <= 0)
      throw domain_error("gcf tail estimate requires positive coefficients");
  }
}

template <typename T>
mpq_class to_mpq(const T& v) {
  return mpq_class(v);
}

}  // namespace detail

// Alternating-tail error estimate: a1 a2 ... a_{n+1} / (B_n B_{n+1}), a strict
// upper bound on |value - A_n/B_n| when all a_k, b_k > 0 for k <= n+1.
template <typename T>
mpq_class gcf_tail_bound(const GcfTerms<T>& f, long n, const T& B_n, const T& B_n1) {
  if (n < 0) throw domain_error("gcf_tail_bound: n must be >= 0");
  detail::require_positive_terms(f, n + 1);
  mpq_class prod(1);
  for (long k = 1; k <= n + 1; ++k) prod *= detail::to_mpq(f.a(k));
  mpq_class denom = detail::to_mpq(B_n) * detail::to_mpq(B_n1);
  mpq_class r = prod / denom;
  r.canonicalize();
  return r;
}

// Value of the fraction as the telescoped series
//   b0 + sum_{k=0}^{n_terms-1} (-1)^k a1...a_{k+1} / (B_k B_{k+1}),
// returned as a ball whose radius covers the alternating tail (positive
// coefficients required for the tail to be available).
template <typename T>
Ball gcf_value(const GcfTerms<T>& f, long n_terms, mpfr_prec_t precision_bits) {
  if (n_terms < 1) throw domain_error("gcf_value: n_terms must be >= 1");
  detail::require_positive_terms(f, n_terms + 1);
  auto rows = gcf_convergents(f, n_terms + 1);
  mpq_class sum = detail::to_mpq(f.b0);
  mpq_class prod(1);
  for (long k = 0; k < n_terms; ++k) {
    prod *= detail::to_mpq(f.a(k + 1));
    mpq_class term = prod / (detail::to_mpq(rows[k].B) * detail::to_mpq(rows[k + 1].B));
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  sum.canonicalize();
  Ball v = Ball::of_rational(sum, precision_bits);
  mpq_class tail = gcf_tail_bound(f, n_terms, rows[n_terms].B, rows[n_terms + 1].B);
  Ball t = Ball::of_rational(tail, Ball::kRadiusPrec);
  mpfr_add(v.rad(), v.rad(), t.upper_point().mid(), MPFR_RNDU);
  return v;
}

}  // namespace ratexp
