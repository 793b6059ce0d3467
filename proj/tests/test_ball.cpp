#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ratexp/ball.hpp"

using namespace ratexp;

namespace {

// deterministic generator for property tests
std::uint64_t mix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// random dyadic in roughly [2^-8, 2^8), sign optional
mpq_class random_dyadic(std::uint64_t& s, bool allow_negative) {
  mpq_class q(mpz_class(mix(s) >> 11), mpz_class(1) << 45);
  q.canonicalize();
  q += mpq_class(1, 256);
  if (allow_negative && (mix(s) & 1)) q = -q;
  return q;
}

}  // namespace

TEST_CASE("exact constructors carry no radius") {
  CHECK(Ball::exact(42L, 128).is_exact());
  CHECK(Ball::exact(mpz_class("123456789123456789"), 128).is_exact());
  CHECK(Ball::exact(0.5, 64).is_exact());
  // 1/3 is not dyadic: the ball must still contain it
  Ball third = Ball::of_rational(mpq_class(1, 3), 64);
  CHECK(contains_q(third, mpq_class(1, 3)));
}

TEST_CASE("certify_sign basics") {
  Ball a = Ball::exact(1.0, 64);
  mpfr_set_d(a.rad(), 0.5, MPFR_RNDU);
  CHECK(certify_sign(a) == Sign::positive);

  Ball b = Ball::exact(0.0, 64);
  mpfr_set_d(b.rad(), 1.0, MPFR_RNDU);
  CHECK(certify_sign(b) == Sign::undecided);

  Ball c = Ball::exact(-3.0, 64);
  mpfr_set_d(c.rad(), 2.9, MPFR_RNDU);
  CHECK(certify_sign(c) == Sign::negative);

  CHECK(certify_sign(Ball(64)) == Sign::undecided);  // exact zero
}

TEST_CASE("enclosure composition on random rationals") {
  std::uint64_t seed = 7;
  for (int i = 0; i < 200; ++i) {
    mpq_class qa = random_dyadic(seed, true);
    mpq_class qb = random_dyadic(seed, true);
    Ball a = Ball::of_rational(qa, 96);
    Ball b = Ball::of_rational(qb, 96);
    CHECK(contains_q(a + b, qa + qb));
    CHECK(contains_q(a - b, qa - qb));
    CHECK(contains_q(a * b, qa * qb));
    CHECK(contains_q(a / b, qa / qb));   // qb is bounded away from zero
    CHECK(contains_q((a + b) - b, qa));  // (a+b)-b contains a
  }
}

TEST_CASE("exp(log(x)) contains x for random positive x") {
  std::uint64_t seed = 11;
  for (int i = 0; i < 100; ++i) {
    mpq_class q = random_dyadic(seed, false);
    Ball x = Ball::of_rational(q, 128);
    CHECK(contains_q(exp(log(x)), q));
    CHECK(contains_q(sqrt(x) * sqrt(x), q));
  }
}

TEST_CASE("exp(1) at 256 bits: tight radius and 50-digit reference") {
  Ball e = Ball::e(256);
  // independently known 50-digit value
  Ball ref = Ball::from_decimal(
      "2.71828182845904523536028747135266249775724709369995", 512);
  Ball tol(64);
  mpfr_set_ui_2exp(tol.mid(), 1, -160, MPFR_RNDN);  // reference has ~166 bits
  CHECK(certainly_less(abs(e - ref), tol));
  Ball radius_cap(64);
  mpfr_set_ui_2exp(radius_cap.mid(), 1, -250, MPFR_RNDN);
  Ball rad_ball(64);
  mpfr_set(rad_ball.mid(), e.rad(), MPFR_RNDU);
  CHECK(certainly_less(rad_ball, radius_cap));
}

TEST_CASE("precision refinement nests") {
  // evaluating the same expression at 2p must land inside the p-version
  std::uint64_t seed = 23;
  for (int i = 0; i < 50; ++i) {
    mpq_class q = random_dyadic(seed, false);
    auto eval = [&](mpfr_prec_t p) {
      Ball x = Ball::of_rational(q, p);
      return exp(sqrt(x)) / log(x + Ball::exact(2L, p));
    };
    Ball coarse = eval(96);
    Ball fine = eval(192);
    CHECK(overlaps(coarse, fine));
    CHECK(contains(coarse, fine));
  }
}

TEST_CASE("exp and log midpoints stay within radius of a 4x-precision run") {
  std::uint64_t seed = 31;
  for (int i = 0; i < 50; ++i) {
    mpq_class q = random_dyadic(seed, false);
    Ball x = exp(Ball::of_rational(q, 128));
    Ball xr = exp(Ball::of_rational(q, 512));
    CHECK(contains(x, xr));
    Ball l = log(Ball::of_rational(q, 128));
    Ball lr = log(Ball::of_rational(q, 512));
    CHECK(contains(l, lr));
  }
}

TEST_CASE("domain guards") {
  Ball z(64);  // exact zero
  CHECK_THROWS_AS(log(z), domain_error);
  CHECK_THROWS_AS(Ball::exact(1L, 64) / z, domain_error);
  Ball neg = Ball::exact(-1L, 64);
  CHECK_THROWS_AS(sqrt(neg), domain_error);
  Ball straddle = Ball::exact(0.0, 64);
  mpfr_set_d(straddle.rad(), 1.0, MPFR_RNDU);
  CHECK_THROWS_AS(log(straddle), domain_error);
}

TEST_CASE("pow_int and pow_ratio") {
  Ball two = Ball::exact(2L, 128);
  CHECK(contains_q(pow_int(two, 10), mpq_class(1024)));
  CHECK(contains_q(pow_int(two, -3), mpq_class(1, 8)));
  CHECK(contains_q(pow_int(two, 0), mpq_class(1)));
  Ball r = pow_ratio(Ball::exact(16L, 128), mpq_class(1, 4));
  CHECK(contains_q(r, mpq_class(2)));
  Ball c = pow_ratio(Ball::exact(8L, 128), mpq_class(4, 3));
  CHECK(contains_q(c, mpq_class(16)));
}

TEST_CASE("max covers both operands") {
  Ball a = Ball::exact(3L, 64);
  Ball b = Ball::exact(5L, 64);
  Ball m = max(a, b);
  CHECK(contains_q(m, mpq_class(5)));
  CHECK(certainly_less(a, m + Ball::exact(1L, 64)));
  std::uint64_t seed = 5;
  for (int i = 0; i < 50; ++i) {
    mpq_class qa = random_dyadic(seed, true);
    mpq_class qb = random_dyadic(seed, true);
    Ball mm = max(Ball::of_rational(qa, 96), Ball::of_rational(qb, 96));
    CHECK(contains_q(mm, qa > qb ? qa : qb));
  }
}

TEST_CASE("integer extraction") {
  Ball x = Ball::exact(mpq_class(19028, 1000).get_num(), 128);  // 19028
  x = x / Ball::exact(1000L, 128);
  auto m = nearest_integer(x);
  REQUIRE(m.has_value());
  CHECK(*m == 19);
  auto f = floor_integer(x);
  REQUIRE(f.has_value());
  CHECK(*f == 19);
  auto c = ceil_integer(x);
  REQUIRE(c.has_value());
  CHECK(*c == 20);

  // straddling a half-integer: undecidable nearest
  Ball half = Ball::of_rational(mpq_class(1, 2), 64);
  mpfr_set_d(half.rad(), 0.1, MPFR_RNDU);
  CHECK(!nearest_integer(half).has_value());
}

TEST_CASE("decimal round trip") {
  std::uint64_t seed = 41;
  for (int i = 0; i < 50; ++i) {
    Ball x = exp(Ball::of_rational(random_dyadic(seed, true), 192));
    Ball y(192);
    std::string mid = x.mid_string();
    mpfr_set_str(y.mid(), mid.c_str(), 10, MPFR_RNDN);
    CHECK(mpfr_equal_p(x.mid(), y.mid()));
  }
}
