#include <vector>

#include "doctest.h"
#include "ratexp/exp_cf.hpp"
#include "ratexp/gcf.hpp"

using namespace ratexp;

namespace {

// independent hand-iteration oracle for the three-term recurrence
std::vector<mpz_class> denominators_oracle(long s, long t, long n_max) {
  mpz_class s2 = mpz_class(s) * s;
  std::vector<mpz_class> B{1, 6 * mpz_class(t)};
  for (long n = 2; n <= n_max; ++n)
    B.push_back(2 * t * (2 * n + 1) * B[n - 1] + s2 * B[n - 2]);
  B.resize(n_max + 1);
  return B;
}

std::vector<mpz_class> numerators_oracle(long s, long t, long n_max) {
  mpz_class s2 = mpz_class(s) * s;
  std::vector<mpz_class> A{0, s2};
  for (long n = 2; n <= n_max; ++n)
    A.push_back(2 * t * (2 * n + 1) * A[n - 1] + s2 * A[n - 2]);
  A.resize(n_max + 1);
  return A;
}

}  // namespace

TEST_CASE("convergents of the e-expansion coefficients") {
  RationalExponent one_one(1, 1);
  auto rows = gcf_convergents(exp_gcf_terms(one_one), 3);
  // oracle: C_n = (4n+2) C_{n-1} + C_{n-2}
  CHECK(rows[0].B == 1);
  CHECK(rows[1].B == 6);
  CHECK(rows[2].B == 61);
  CHECK(rows[3].B == 860);
  CHECK(rows[0].A == 0);
  CHECK(rows[1].A == 1);
  CHECK(rows[2].A == 10);
  CHECK(rows[3].A == 141);
  auto B = denominators_oracle(1, 1, 3);
  auto A = numerators_oracle(1, 1, 3);
  for (long n = 0; n <= 3; ++n) {
    CHECK(rows[n].B == B[n]);
    CHECK(rows[n].A == A[n]);
  }
}

TEST_CASE("single row for n_max = 0; zero partial numerators rejected") {
  GcfTerms<mpz_class> f{5, [](long) { return mpz_class(0); },
                        [](long) { return mpz_class(1); }};
  auto rows = gcf_convergents(f, 0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].A == 5);
  CHECK(rows[0].B == 1);
  CHECK_THROWS_AS(gcf_convergents(f, 1), domain_error);
}

TEST_CASE("tail bound values") {
  RationalExponent one_one(1, 1);
  auto f = exp_gcf_terms(one_one);
  auto rows = gcf_convergents(f, 3);
  CHECK(gcf_tail_bound(f, 1, rows[1].B, rows[2].B) == mpq_class(1, 6 * 61));

  RationalExponent two_one(2, 1);
  auto g = exp_gcf_terms(two_one);
  auto grows = gcf_convergents(g, 1);
  CHECK(gcf_tail_bound(g, 0, grows[0].B, grows[1].B) == mpq_class(2, 3));  // 4/6 reduced

  // oracle: recurrence with b_k = 4(2k+1) gives B2 = 20*12+1 = 241,
  // B3 = 28*241+12 = 6760
  RationalExponent one_two(1, 2);
  auto h = exp_gcf_terms(one_two);
  auto hrows = gcf_convergents(h, 3);
  CHECK(hrows[2].B == 241);
  CHECK(hrows[3].B == 6760);
  CHECK(gcf_tail_bound(h, 2, hrows[2].B, hrows[3].B) == mpq_class(1, 241 * 6760));

  GcfTerms<mpz_class> bad{0, [](long) { return mpz_class(-1); },
                          [](long) { return mpz_class(3); }};
  CHECK_THROWS_AS(gcf_tail_bound(bad, 1, mpz_class(1), mpz_class(1)), domain_error);
}

TEST_CASE("telescoping identity holds exactly up to n = 200") {
  for (auto [s, t] : {std::pair<long, long>{1, 1}, {3, 1}, {-2, 3}, {5, 2}}) {
    RationalExponent arg(s, t);
    auto f = exp_gcf_terms(arg);
    auto rows = gcf_convergents(f, 201);
    mpz_class prod = 1;
    for (long n = 0; n <= 200; ++n) {
      prod *= f.a(n + 1);
      mpz_class lhs = rows[n + 1].A * rows[n].B - rows[n].A * rows[n + 1].B;
      mpz_class rhs = (n % 2 == 0) ? prod : mpz_class(-prod);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("telescoping identity for rational coefficient streams") {
  GcfTerms<mpq_class> f{mpq_class(1, 2),
                        [](long k) { return mpq_class(k, k + 1); },
                        [](long k) { return mpq_class(2 * k + 1, 3); }};
  auto rows = gcf_convergents(f, 40);
  mpq_class prod = 1;
  for (long n = 0; n < 40; ++n) {
    prod *= f.a(n + 1);
    mpq_class lhs = rows[n + 1].A * rows[n].B - rows[n].A * rows[n + 1].B;
    mpq_class rhs = (n % 2 == 0) ? prod : mpq_class(-prod);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gcf_value encloses the exact convergent and the true value") {
  RationalExponent arg(1, 1);
  auto f = exp_gcf_terms(arg);
  auto rows = gcf_convergents(f, 3);
  Ball v = gcf_value(f, 3, 256);
  // partial sum through k = 2 equals A_3/B_3 exactly
  CHECK(contains_q(v, mpq_class(141, 860)));
  // first partial sum: ball around 1/6
  Ball v1 = gcf_value(f, 1, 256);
  CHECK(contains_q(v1, mpq_class(1, 6)));
  // value agrees with 2s/(e^{s/t}-1) + s - 2t
  Ball direct = exp_cf_value(arg, 256);
  CHECK(overlaps(gcf_value(f, 30, 256), direct));
  (void)rows;
}

TEST_CASE("gcf_value balls at n_terms and n_terms+1 overlap") {
  for (auto [s, t] : {std::pair<long, long>{1, 1}, {3, 2}, {-1, 1}}) {
    RationalExponent arg(s, t);
    auto f = exp_gcf_terms(arg);
    for (long n : {1L, 2L, 5L, 9L})
      CHECK(overlaps(gcf_value(f, n, 192), gcf_value(f, n + 1, 192)));
  }
}

TEST_CASE("tail bound decreases once 2t(2n+3) > s^2") {
  for (auto [s, t] : {std::pair<long, long>{1, 1}, {5, 1}, {7, 2}}) {
    RationalExponent arg(s, t);
    auto f = exp_gcf_terms(arg);
    auto rows = gcf_convergents(f, 42);
    for (long n = 0; n + 1 <= 40; ++n) {
      if (2 * t * (2 * n + 3) <= s * s) continue;
      mpq_class tn = gcf_tail_bound(f, n, rows[n].B, rows[n + 1].B);
      mpq_class tn1 = gcf_tail_bound(f, n + 1, rows[n + 1].B, rows[n + 2].B);
      CHECK(tn1 < tn);
    }
  }
}

TEST_CASE("non-positive coefficients have no certified radius") {
  GcfTerms<mpz_class> f{0, [](long) { return mpz_class(1); },
                        [](long k) { return mpz_class(k == 2 ? -7 : 3); }};
  CHECK_THROWS_AS(gcf_value(f, 3, 128), domain_error);
}
