#include <cstdint>
#include <numeric>

#include "doctest.h"
#include "ratexp/padic.hpp"

using namespace ratexp;

namespace {

std::uint64_t mix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// brute-force base conversion
unsigned long digit_sum_oracle(unsigned long n, unsigned long p) {
  unsigned long s = 0;
  for (; n; n /= p) s += n % p;
  return s;
}

// brute-force sum of prime orders of 1..n
unsigned long vp_factorial_oracle(unsigned long n, unsigned long p) {
  unsigned long total = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    unsigned long m = k;
    while (m % p == 0) {
      ++total;
      m /= p;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("factorize") {
  auto f = factorize(12);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<mpz_class, unsigned long>{2, 2});
  CHECK(f.factors[1] == std::pair<mpz_class, unsigned long>{3, 1});
  CHECK(factorize(1).factors.empty());
  auto g = factorize(97);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == std::pair<mpz_class, unsigned long>{97, 1});
  // reconstruction property
  std::uint64_t seed = 3;
  for (int i = 0; i < 40; ++i) {
    mpz_class n = mpz_class(mix(seed) % 100000) + 1;
    mpz_class prod = 1;
    for (auto& [p, m] : factorize(n).factors) {
      CHECK(is_prime(p));
      prod *= zpow(p, m);
    }
    CHECK(prod == n);
  }
}

TEST_CASE("vp") {
  CHECK(vp(48, 2) == PadicOrder::finite(4));
  CHECK(vp(0, 5) == PadicOrder::inf());
  CHECK(vp(7, 3) == PadicOrder::finite(0));
  CHECK_THROWS_AS(vp(10, 6), domain_error);
  CHECK_THROWS_AS(vp(-1, 3), domain_error);
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(10, 2) == 2);
  CHECK(digit_sum(0, 7) == 0);
  CHECK(digit_sum(26, 3) == digit_sum_oracle(26, 3));  // 26 = 222 base 3
  CHECK(digit_sum(26, 3) == 6);
  std::uint64_t seed = 9;
  for (int i = 0; i < 60; ++i) {
    unsigned long n = mix(seed) % 1000000;
    for (unsigned long p : {2ul, 3ul, 5ul, 13ul})
      CHECK(digit_sum(n, p) == digit_sum_oracle(n, p));
  }
}

TEST_CASE("vp_factorial matches the brute-force valuation sum") {
  CHECK(vp_factorial(10, 2) == vp_factorial_oracle(10, 2));
  CHECK(vp_factorial(10, 2) == 8);
  CHECK(vp_factorial(0, 3) == 0);
  CHECK(vp_factorial(9, 3) == vp_factorial_oracle(9, 3));
  CHECK(vp_factorial(9, 3) == 4);
  for (unsigned long n : {1ul, 2ul, 17ul, 100ul, 719ul, 720ul, 1024ul})
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul})
      CHECK(vp_factorial(n, p) == vp_factorial_oracle(n, p));
}

TEST_CASE("non-Archimedean inequality on random pairs") {
  std::uint64_t seed = 17;
  for (int i = 0; i < 120; ++i) {
    mpz_class m = mpz_class(mix(seed) % 40000) + 1;
    mpz_class n = mpz_class(mix(seed) % 40000) + 1;
    for (long p : {2L, 3L, 5L, 7L}) {
      auto vm = vp(m, p), vn = vp(n, p), vs = vp(m + n, p);
      unsigned long lo = std::min(vm.value, vn.value);
      CHECK(vs.value >= lo);
      if (vm.value != vn.value) CHECK(vs.value == lo);
    }
  }
}

TEST_CASE("big_divisor") {
  CHECK(big_divisor(2, 3) == 3);  // v_3(3!) = 1
  CHECK(big_divisor(0, 1) == 1);
  CHECK(big_divisor(5, -1) == 1);
  CHECK(big_divisor(2, 6) == 24);  // 2^3 * 3
  // brute force against vp of the factorial itself
  for (long n : {0L, 1L, 4L, 9L, 30L}) {
    mpz_class fact = 1;
    for (long k = 2; k <= n + 1; ++k) fact *= k;
    for (long s : {3L, 5L, 15L, -21L}) {
      mpz_class d = big_divisor(n, s);
      for (auto& [p, m] : factorize(::abs(mpz_class(s))).factors) {
        (void)m;
        if (p == 2) continue;
        CHECK(vp(d, p).value == vp(fact, p).value);
      }
    }
  }
}

TEST_CASE("exponent argument invariants") {
  CHECK_THROWS_AS(RationalExponent(0, 1), domain_error);
  CHECK_THROWS_AS(RationalExponent(2, 4), domain_error);
  CHECK_THROWS_AS(RationalExponent(3, 0), domain_error);
  CHECK_THROWS_AS(RationalExponent(3, -1), domain_error);
  CHECK_NOTHROW(RationalExponent(-3, 2));
}

TEST_CASE("profile of (3, 1): alpha = sqrt(3), beta = 1, gamma = 3") {
  auto pr = arithmetic_profile(RationalExponent(3, 1), 256);
  CHECK(pr.beta == 1);
  CHECK(pr.gamma == 3);
  CHECK(pr.gcd2 == 1);
  Ball root3 = sqrt(Ball::exact(3L, 320));
  CHECK(overlaps(pr.alpha, root3));
  // sigma = 4 sqrt(3) / (9 e)
  Ball sigma_ref = mul_z(root3, 4) / (Ball::exact(9L, 320) * Ball::e(320));
  CHECK(overlaps(pr.sigma, sigma_ref));
  // relative agreement to 1e-10
  Ball rel = abs(pr.sigma - sigma_ref) / sigma_ref;
  CHECK(certainly_less_q(rel, mpq_class(1, 10000000000L)));
  // sigma < 1 here, so rho = 5 - 2 log sigma
  Ball rho_ref = Ball::exact(5L, 320) - mul_2si(log(sigma_ref), 1);
  CHECK(overlaps(pr.rho, rho_ref));
}

TEST_CASE("profile of (1, 2): the no-common-factor baseline") {
  auto pr = arithmetic_profile(RationalExponent(1, 2), 192);
  CHECK(pr.beta == 0);
  CHECK(pr.gamma == 1);
  CHECK(pr.alpha_log.is_exact());
  CHECK(pr.alpha_log.contains_zero());
  CHECK(contains_q(pr.alpha, mpq_class(1)));
  CHECK(pr.excess_zero);
}

TEST_CASE("profile of (6, 1): alpha = 2 sqrt(3)") {
  auto pr = arithmetic_profile(RationalExponent(6, 1), 256);
  CHECK(pr.beta == 1);
  CHECK(pr.gamma == 3);
  CHECK(pr.gcd2 == 2);
  Ball ref = mul_2si(sqrt(Ball::exact(3L, 320)), 1);
  CHECK(overlaps(pr.alpha, ref));
  Ball rel = abs(pr.alpha - ref) / ref;
  CHECK(certainly_less_q(rel, mpq_class(1, 10000000000L)));
}

TEST_CASE("alpha vs |s|: equal only for |s| in {1, 2}, strictly between otherwise") {
  for (long s = 1; s <= 12; ++s) {
    auto pr = arithmetic_profile(RationalExponent(s, s % 2 ? 2 : 1), 192);
    Ball abs_s = Ball::exact(s, 192);
    if (s <= 2) {
      CHECK(pr.excess_zero);
      CHECK(contains_q(pr.alpha, mpq_class(s)));
    } else {
      CHECK(certainly_less(pr.alpha, abs_s));
      CHECK(certainly_less(Ball::exact(1L, 192), pr.alpha));
    }
  }
}

TEST_CASE("divisor bounds via exact integer powers") {
  // alpha^{n+1} / (gamma (n+1)^beta) <= D_n <= gcd(2,s) alpha^n, compared
  // exactly after raising to the power P = lcm(p-1).
  for (long s : {1L, 2L, 3L, 4L, 6L, 12L, -9L}) {
    unsigned long P = 1;
    auto factors = factorize(::abs(mpz_class(s))).factors;
    for (auto& [p, m] : factors) {
      (void)m;
      unsigned long pm1 = mpz_class(p - 1).get_ui();
      P = std::lcm(P, pm1 == 0 ? 1 : pm1);
    }
    auto alpha_P = [&]() {  // alpha^P as an exact integer
      mpz_class r = 1;
      for (auto& [p, m] : factors) {
        (void)m;
        r *= zpow(p, P / mpz_class(p - 1).get_ui());
      }
      return r;
    }();
    mpz_class gamma = 1;
    unsigned long beta = 0;
    for (auto& [p, m] : factors) {
      (void)m;
      if (p != 2) {
        gamma *= p;
        ++beta;
      }
    }
    int gcd2 = (s % 2 == 0) ? 2 : 1;
    for (long n = 0; n <= 60; ++n) {
      mpz_class D = big_divisor(n, s);
      mpz_class DP = zpow(D, P);
      // upper: D^P <= gcd2^P alpha^{nP}
      CHECK(DP <= zpow(mpz_class(gcd2), P) * zpow(alpha_P, n));
      // lower: alpha^{(n+1)P} <= (gamma (n+1)^beta)^P D^P
      CHECK(zpow(alpha_P, n + 1) <= zpow(gamma * zpow(mpz_class(n + 1), beta), P) * DP);
    }
  }
}

TEST_CASE("exp_st radius contract") {
  for (auto [s, t] : {std::pair<long, long>{1, 1}, {-1, 1}, {12, 5}, {3, 1}}) {
    for (mpfr_prec_t p : {64L, 256L, 1024L}) {
      Ball v = exp_st(RationalExponent(s, t), p);
      CHECK(v.precision() == p);
      // radius <= 2^(2-p) e^{|s|/t}
      Ball cap = mul_2si(exp(Ball::of_rational(mpq_class(s < 0 ? -s : s, t), 64)), 2 - p);
      Ball rad(64);
      mpfr_set(rad.mid(), v.rad(), MPFR_RNDU);
      CHECK(certainly_less(rad, cap));
    }
  }
}
