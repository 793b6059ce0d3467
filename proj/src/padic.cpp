#include "ratexp/padic.hpp"

namespace ratexp {

RationalExponent::RationalExponent(mpz_class s_, mpz_class t_)
    : s(std::move(s_)), t(std::move(t_)) {
  if (s == 0) throw domain_error("exponent argument requires s != 0");
  if (t < 1) throw domain_error("exponent argument requires t >= 1");
  mpz_class a = ::abs(s);
  if (gcd(a, t) != 1) throw domain_error("exponent argument requires gcd(|s|, t) = 1");
}

PrimeFactorization factorize(const mpz_class& n) {
  if (n < 1) throw domain_error("factorize requires n >= 1");
  PrimeFactorization out;
  mpz_class m = n;
  auto strip = [&](const mpz_class& p) {
    unsigned long mult = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(p, mult);
  };
  strip(2);
  for (mpz_class d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

bool is_prime(const mpz_class& p) {
  if (p < 2) return false;
  if (p == 2) return true;
  if (mpz_even_p(p.get_mpz_t())) return false;
  for (mpz_class d = 3; d * d <= p; d += 2)
    if (mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

PadicOrder vp(const mpz_class& n, const mpz_class& p) {
  if (!is_prime(p)) throw domain_error("vp requires a prime p");
  if (n < 0) throw domain_error("vp requires n >= 0");
  if (n == 0) return PadicOrder::inf();
  mpz_class m = n;
  unsigned long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return PadicOrder::finite(v);
}

unsigned long digit_sum(unsigned long n, unsigned long p) {
  if (!is_prime(mpz_class(p))) throw domain_error("digit_sum requires a prime base");
  unsigned long s = 0;
  while (n != 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

unsigned long vp_factorial(unsigned long n, unsigned long p) {
  return (n - digit_sum(n, p)) / (p - 1);
}

mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class big_divisor(long n, const mpz_class& s) {
  if (n < 0) throw domain_error("big_divisor requires n >= 0");
  if (s == 0) throw domain_error("big_divisor requires s != 0");
  mpz_class d = 1;
  for (const auto& [p, mult] : factorize(::abs(s)).factors) {
    (void)mult;
    unsigned long r;
    if (p == 2) {
      r = static_cast<unsigned long>(n) + 1;
    } else {
      if (!p.fits_ulong_p())
        throw domain_error("big_divisor: prime factor of s too large");
      r = vp_factorial(static_cast<unsigned long>(n) + 1, p.get_ui());
    }
    d *= zpow(p, r);
  }
  return d;
}

Ball exp_st(const RationalExponent& arg, mpfr_prec_t precision_bits) {
  mpfr_prec_t wp = std::min<mpfr_prec_t>(precision_bits + 32, Ball::kMaxPrec);
  mpq_class x(arg.s, arg.t);
  x.canonicalize();
  return round_to(exp(Ball::of_rational(x, wp)), precision_bits);
}

ArithmeticProfile arithmetic_profile(const RationalExponent& arg, mpfr_prec_t precision_bits) {
  ArithmeticProfile pr;
  pr.s = arg.s;
  pr.t = arg.t;
  pr.precision = precision_bits;
  mpz_class a = ::abs(arg.s);
  pr.s_factors = factorize(a);
  for (const auto& [p, mult] : pr.s_factors.factors) {
    (void)mult;
    if (p != 2) {
      ++pr.beta;
      pr.gamma *= p;
    }
  }
  pr.gcd2 = mpz_even_p(arg.s.get_mpz_t()) ? 2 : 1;
  pr.excess_zero = (a == 1 || a == 2);

  // The sigma >= 1 branch of rho is a ball comparison with 1; sigma is never
  // exactly 1 (it carries a factor 1/e), so enough precision always decides.
  for (mpfr_prec_t wp = std::max<mpfr_prec_t>(precision_bits, 128);;
       wp = std::min<mpfr_prec_t>(wp * 2, Ball::kMaxPrec)) {
    Ball alpha_log(wp);
    for (const auto& [p, mult] : pr.s_factors.factors) {
      (void)mult;
      alpha_log = alpha_log + log(Ball::exact(p, wp)) / Ball::exact(p - 1, wp);
    }
    Ball alpha = exp(alpha_log);
    Ball euler = Ball::e(wp);
    Ball s2 = Ball::exact(a * a, wp);
    Ball sigma = mul_z(alpha, 4 * arg.t) / (euler * s2);

    Sign branch = certify_sign(sigma - Ball::exact(1L, wp));
    if (branch == Sign::undecided) {
      if (wp >= Ball::kMaxPrec)
        throw precision_exhausted("arithmetic_profile: sigma vs 1 undecided");
      continue;
    }
    pr.alpha_log = alpha_log;
    pr.alpha = alpha;
    pr.sigma = sigma;
    pr.rho = (branch == Sign::positive)
                 ? Ball::of_rational(mpq_class(7, 3), wp)
                 : Ball::exact(5L, wp) - mul_2si(log(sigma), 1);
    pr.exp_value = exp_st(arg, wp);
    // eta = max( sqrt(e) |e^{s/t}-1| gamma / (sqrt(2) sigma^beta) - 1/2,
    //            e/sigma + beta )
    Ball em1 = abs(pr.exp_value - Ball::exact(1L, wp));
    Ball first = sqrt(euler) * em1 * Ball::exact(pr.gamma, wp) /
                 (sqrt(Ball::exact(2L, wp)) * pow_int(sigma, static_cast<long>(pr.beta)));
    first = first - Ball::of_rational(mpq_class(1, 2), wp);
    Ball second = euler / sigma + Ball::exact(static_cast<long>(pr.beta), wp);
    pr.eta = max(first, second);
    pr.log_s_over_alpha =
        pr.excess_zero ? Ball(wp) : log(Ball::exact(a, wp)) - alpha_log;
    break;
  }
  return pr;
}

}  // namespace ratexp
