#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratexp/ball.hpp"
#include "ratexp/bounds.hpp"
#include "ratexp/padic.hpp"

namespace ratexp {

enum class Verdict { holds, undecided, violated };

std::string to_string(Verdict v);

// Outcome of certifying the strict lower bound at one (N, M):
//   margin = log|e^{s/t} - M/N| - log_lower_bound,
// holds iff the margin ball is strictly positive, violated iff strictly
// negative, undecided only when the precision cap was reached.
struct VerifyRecord {
  mpz_class s, t, N, M;
  std::string bound;  // "general" or "e3"
  Ball log_N;
  Ball log_abs_lambda_over_N;  // log |e^{s/t} - M/N|
  Ball log_lower_bound;
  Ball margin;
  Verdict verdict = Verdict::undecided;
  bool threshold_ok = false;
  mpfr_prec_t precision_used = Ball::kMinPrec;
};

// Nearest integer to N e^{s/t} (the unique minimizer of |e^{s/t} - M/N| over
// nonzero M; returns 1 when the product rounds to 0, since the value is
// positive). Adaptive precision; throws precision_exhausted at the cap.
mpz_class best_numerator(const RationalExponent& arg, const mpz_class& N,
                         mpfr_prec_t start_precision,
                         mpfr_prec_t max_precision = Ball::kMaxPrec);

// First `count` simple-continued-fraction convergents p/q of e^{s/t},
// extracted from a certified value with every partial quotient certain.
std::vector<std::pair<mpz_class, mpz_class>> scf_convergents(
    const RationalExponent& arg, long count, mpfr_prec_t precision_bits);

// Certify the general lower bound at N (nearest M by default; callers may
// probe any nonzero M). Below-threshold N is still evaluated, flagged via
// threshold_ok. Never throws for precision: caps out as `undecided`.
VerifyRecord check_lower_bound(const RationalExponent& arg, const mpz_class& N,
                               mpfr_prec_t start_precision,
                               const std::optional<mpz_class>& M = std::nullopt,
                               mpfr_prec_t max_precision = Ball::kMaxPrec);

struct SweepParams {
  double logN_lo = 0;
  double logN_hi = 0;
  long samples = 1;
  std::uint64_t seed = 0;
  mpfr_prec_t precision = 1024;
  mpfr_prec_t max_precision = Ball::kMaxPrec;
  bool include_scf = true;  // add SCF denominators falling inside the window
  bool parallel = true;     // OpenMP over records; results are order-stable
};

// Seeded log-uniform sample of exact integers N in [e^lo, e^hi], each run
// through check_lower_bound; SCF convergent denominators in range are added
// when include_scf is set. Output is sorted by N and deterministic for a
// fixed seed, whether run parallel or serial.
std::vector<VerifyRecord> sweep(const RationalExponent& arg, const SweepParams& params);

// The same records evaluated against the specialized e^3 bound
// (factor 1561, exponent 2 + log 3 (1 + 4 eps(N))/loglog N, cube polylog),
// for seeded logN uniform in [logN_lo, logN_hi] with logN_lo >= 983.
// N is materialized as ceil(e^u) so no draw lands below the threshold.
std::vector<VerifyRecord> check_corollary4(double logN_lo, double logN_hi, long samples,
                                           std::uint64_t seed, mpfr_prec_t precision,
                                           mpfr_prec_t max_precision = Ball::kMaxPrec,
                                           bool parallel = true);
// Explicit logN targets instead of seeded draws.
std::vector<VerifyRecord> check_corollary4(const std::vector<double>& logN_samples,
                                           mpfr_prec_t precision,
                                           mpfr_prec_t max_precision = Ball::kMaxPrec,
                                           bool parallel = true);

// The fixed pseudo-random generator behind every seeded sweep.
std::uint64_t splitmix64(std::uint64_t& state);

// Exact integers drawn by `sweep` for the given parameters (exposed so the
// serial/parallel paths and the benchmark share one sampling routine).
std::vector<mpz_class> sweep_sample_points(const RationalExponent& arg,
                                           const SweepParams& params);

}  // namespace ratexp
