#include "ratexp/exp_cf.hpp"

#include <algorithm>

namespace ratexp {

GcfTerms<mpz_class> exp_gcf_terms(const RationalExponent& arg) {
  mpz_class s2 = arg.s * arg.s;
  mpz_class twot = 2 * arg.t;
  return {mpz_class(0), [s2](long) { return s2; },
          [twot](long k) { return mpz_class(twot * (2 * k + 1)); }};
}

std::vector<ConvergentRow> exp_cf_rows(const RationalExponent& arg, long n_max) {
  auto base = gcf_convergents(exp_gcf_terms(arg), n_max);
  mpz_class shift_plus = 2 * arg.t + arg.s;
  mpz_class shift_minus = 2 * arg.t - arg.s;
  std::vector<ConvergentRow> rows;
  rows.reserve(base.size());
  for (auto& c : base) {
    ConvergentRow r;
    r.n = c.n;
    r.A = std::move(c.A);
    r.B = std::move(c.B);
    r.Cplus = r.A + shift_plus * r.B;
    r.Cminus = r.A + shift_minus * r.B;
    r.D = big_divisor(r.n, arg.s);
    if (!mpz_divisible_p(r.Cplus.get_mpz_t(), r.D.get_mpz_t()) ||
        !mpz_divisible_p(r.Cminus.get_mpz_t(), r.D.get_mpz_t()))
      throw internal_error("common divisor does not divide the shifted numerators");
    mpz_divexact(r.J.get_mpz_t(), r.Cplus.get_mpz_t(), r.D.get_mpz_t());
    mpz_divexact(r.H.get_mpz_t(), r.Cminus.get_mpz_t(), r.D.get_mpz_t());
    rows.push_back(std::move(r));
  }
  return rows;
}

std::pair<mpz_class, mpz_class> cpm_closed_form(const RationalExponent& arg, long n) {
  if (n < 0) throw domain_error("cpm_closed_form requires n >= 0");
  // coefficient (n+1+k)!/(k!(n+1-k)!) built incrementally:
  //   c_{k+1} = c_k (n+k+2)(n+1-k)/(k+1)
  mpz_class coef = 1;
  mpz_class tpow = 1;
  mpz_class sp = zpow(arg.s, static_cast<unsigned long>(n) + 1);   // s^{n+1-k}
  mpz_class sm = zpow(-arg.s, static_cast<unsigned long>(n) + 1);  // (-s)^{n+1-k}
  mpz_class plus = 0, minus = 0;
  for (long k = 0; k <= n + 1; ++k) {
    plus += coef * tpow * sp;
    minus += coef * tpow * sm;
    if (k == n + 1) break;
    coef *= mpz_class(n + k + 2) * (n + 1 - k);
    mpz_class den(k + 1);
    mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), den.get_mpz_t());
    tpow *= arg.t;
    mpz_divexact(sp.get_mpz_t(), sp.get_mpz_t(), arg.s.get_mpz_t());
    mpz_class neg_s = -arg.s;
    mpz_divexact(sm.get_mpz_t(), sm.get_mpz_t(), neg_s.get_mpz_t());
  }
  return {plus, minus};
}

mpq_class determinant_residual(const std::vector<ConvergentRow>& rows, long n) {
  if (n < 0 || static_cast<size_t>(n) + 1 >= rows.size() || rows[n].n != n ||
      rows[n + 1].n != n + 1)
    throw domain_error("determinant_residual: rows must contain indices n and n+1");
  const ConvergentRow& r0 = rows[n];
  const ConvergentRow& r1 = rows[n + 1];
  // recover s from the row itself: C+ - C- = 2 s B
  mpz_class s;
  mpz_class num = r0.Cplus - r0.Cminus;
  mpz_class den = 2 * r0.B;
  mpz_divexact(s.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpq_class lhs(r0.J * r1.H - r1.J * r0.H);
  mpz_class spow = zpow(s, 2 * static_cast<unsigned long>(n) + 3);
  mpq_class expected(2 * spow, r0.D * r1.D);
  expected.canonicalize();
  if (n % 2 != 0) expected = -expected;
  return lhs - expected;
}

Ball exp_cf_value(const RationalExponent& arg, mpfr_prec_t precision_bits) {
  Ball x = exp_st(arg, precision_bits);
  return Ball::exact(mpz_class(2 * arg.s), precision_bits) / sub_z(x, 1) +
         Ball::exact(mpz_class(arg.s - 2 * arg.t), precision_bits);
}

std::vector<LinearFormSample> linear_forms(const RationalExponent& arg, long n_max,
                                           mpfr_prec_t precision_bits,
                                           mpfr_prec_t max_precision) {
  if (n_max < 0) throw domain_error("linear_forms requires n_max >= 0");
  auto rows = exp_cf_rows(arg, n_max + 1);
  size_t s_bits = mpz_sizeinbase(arg.s.get_mpz_t(), 2);
  mpfr_prec_t start = std::max<mpfr_prec_t>(
      {precision_bits, 256,
       static_cast<mpfr_prec_t>(4 * (n_max + 1) * static_cast<long>(s_bits) + 64)});
  mpz_class s2 = arg.s * arg.s;
  for (mpfr_prec_t p = start;; p = std::min<mpfr_prec_t>(p * 2, max_precision)) {
    Ball est = exp_st(arg, p);
    Ball E = Ball::exact(mpz_class(2 * arg.s), p) / sub_z(est, 1) +
             Ball::exact(mpz_class(arg.s - 2 * arg.t), p);
    Ball one_minus_e = Ball::exact(1L, p) - est;
    std::vector<LinearFormSample> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    bool certified = true;
    for (long n = 0; n <= n_max; ++n) {
      const ConvergentRow& r = rows[n];
      LinearFormSample s;
      s.n = n;
      s.R = sub_z(mul_z(E, r.B), r.A);
      s.L = one_minus_e * s.R / Ball::exact(r.D, p);
      // (1 - e^{s/t}) R_n = C- e^{s/t} - C+ must hold within radii
      Ball rhs = sub_z(mul_z(est, r.Cminus), r.Cplus);
      Ball diff = one_minus_e * s.R - rhs;
      if (!diff.contains_zero())
        throw internal_error("linear form identity violated");
      // tail estimate |R_n| < s^{2(n+1)} / B_{n+1}
      mpq_class bound(zpow(s2, static_cast<unsigned long>(n) + 1), rows[n + 1].B);
      bound.canonicalize();
      if (!certainly_less_q(abs(s.R), bound)) {
        certified = false;
        break;
      }
      out.push_back(std::move(s));
    }
    if (certified) return out;
    if (p >= max_precision)
      throw precision_exhausted("linear_forms: tail estimate not certifiable at cap");
  }
}

mpq_class induced_fraction(const ConvergentRow& row) {
  if (row.Cminus == 0) throw domain_error("induced_fraction: zero denominator row");
  mpq_class f(row.Cplus, row.Cminus);
  f.canonicalize();
  return f;
}

}  // namespace ratexp
