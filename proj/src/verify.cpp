#include "ratexp/verify.hpp"

#include <algorithm>

namespace ratexp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    default:
      return "undecided";
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

// u = lo + (hi - lo) k / 2^53 as an exact rational, platform independent.
mpq_class draw_uniform(double lo, double hi, std::uint64_t& state) {
  std::uint64_t k = splitmix64(state) >> 11;
  mpq_class f(mpz_class(k), mpz_class(1) << 53);
  f.canonicalize();
  mpq_class qlo(lo), qhi(hi);
  return qlo + (qhi - qlo) * f;
}

mpfr_prec_t integer_precision_for(double logN_hi) {
  return static_cast<mpfr_prec_t>(logN_hi * 1.4427 + 128);
}

// nearest integer to e^u, certified
mpz_class exp_to_int(const mpq_class& u, mpfr_prec_t start, bool take_ceil) {
  for (mpfr_prec_t p = start;; p = std::min<mpfr_prec_t>(p * 2, Ball::kMaxPrec)) {
    Ball x = exp(Ball::of_rational(u, p));
    auto m = take_ceil ? ceil_integer(x) : nearest_integer(x);
    if (m) return *m;
    if (p >= Ball::kMaxPrec) throw precision_exhausted("sample point rounding undecided");
  }
}

}  // namespace

mpz_class best_numerator(const RationalExponent& arg, const mpz_class& N,
                         mpfr_prec_t start_precision, mpfr_prec_t max_precision) {
  if (N < 1) throw domain_error("best_numerator requires N >= 1");
  for (mpfr_prec_t p = start_precision;;
       p = std::min<mpfr_prec_t>(p * 2, max_precision)) {
    Ball x = mul_z(exp_st(arg, p), N);
    if (auto m = nearest_integer(x)) return *m == 0 ? mpz_class(1) : *m;
    if (p >= max_precision)
      throw precision_exhausted("best_numerator: rounding undecided at cap");
  }
}

std::vector<std::pair<mpz_class, mpz_class>> scf_convergents(
    const RationalExponent& arg, long count, mpfr_prec_t precision_bits) {
  if (count < 1) throw domain_error("scf_convergents requires count >= 1");
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(precision_bits, 256);;
       p = std::min<mpfr_prec_t>(p * 2, Ball::kMaxPrec)) {
    Ball x = exp_st(arg, p);
    std::vector<std::pair<mpz_class, mpz_class>> out;
    out.reserve(static_cast<size_t>(count));
    mpz_class h1 = 1, h2 = 0;  // numerators
    mpz_class k1 = 0, k2 = 1;  // denominators
    bool fail = false;
    Ball cur = x;
    for (long i = 0; i < count; ++i) {
      auto a = floor_integer(cur);
      if (!a) {
        fail = true;
        break;
      }
      mpz_class h = *a * h1 + h2;
      mpz_class k = *a * k1 + k2;
      out.emplace_back(h, k);
      h2 = h1;
      h1 = h;
      k2 = k1;
      k1 = k;
      if (i + 1 == count) break;
      Ball frac = sub_z(cur, *a);
      if (frac.contains_zero()) {
        fail = true;
        break;
      }
      cur = Ball::exact(1L, p) / frac;
    }
    if (!fail) return out;
    if (p >= Ball::kMaxPrec)
      throw precision_exhausted("scf_convergents: partial quotient undecided");
  }
}

VerifyRecord check_lower_bound(const RationalExponent& arg, const mpz_class& N,
                               mpfr_prec_t start_precision,
                               const std::optional<mpz_class>& M,
                               mpfr_prec_t max_precision) {
  if (N < 1) throw domain_error("check_lower_bound requires N >= 1");
  if (M && *M == 0) throw domain_error("check_lower_bound requires M != 0");
  VerifyRecord rec;
  rec.s = arg.s;
  rec.t = arg.t;
  rec.N = N;
  rec.bound = "general";
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(start_precision, 256);;
       p = std::min<mpfr_prec_t>(p * 2, max_precision)) {
    rec.precision_used = p;
    Ball est = exp_st(arg, p);
    Ball nx = mul_z(est, N);
    mpz_class m;
    if (M) {
      m = *M;
    } else {
      auto nearest = nearest_integer(nx);
      if (!nearest) {
        if (p >= max_precision) {
          mpfr_get_z(m.get_mpz_t(), nx.mid(), MPFR_RNDN);
          rec.M = m == 0 ? mpz_class(1) : m;
          rec.verdict = Verdict::undecided;
          return rec;
        }
        continue;
      }
      m = *nearest == 0 ? mpz_class(1) : *nearest;
    }
    rec.M = m;
    Ball lambda = abs(sub_z(nx, m));
    rec.log_N = log_z(N, p);
    try {
      ArithmeticProfile pr = arithmetic_profile(arg, p);
      BoundReport br = bound_report(pr, rec.log_N, p);
      rec.log_abs_lambda_over_N = log(lambda) - rec.log_N;
      rec.log_lower_bound = br.log_lower_bound;
      rec.threshold_ok = br.threshold_ok;
    } catch (const domain_error&) {
      // lambda ball touching zero, or sigma log N not yet above e
      if (p >= max_precision) {
        rec.verdict = Verdict::undecided;
        return rec;
      }
      continue;
    }
    rec.margin = rec.log_abs_lambda_over_N - rec.log_lower_bound;
    Sign s = certify_sign(rec.margin);
    if (s == Sign::positive) {
      rec.verdict = Verdict::holds;
      return rec;
    }
    if (s == Sign::negative) {
      rec.verdict = Verdict::violated;
      return rec;
    }
    if (p >= max_precision) {
      rec.verdict = Verdict::undecided;
      return rec;
    }
  }
}

std::vector<mpz_class> sweep_sample_points(const RationalExponent& arg,
                                           const SweepParams& params) {
  if (params.logN_lo > params.logN_hi) throw domain_error("sweep: empty logN range");
  if (params.logN_lo < 0) throw domain_error("sweep: logN_lo must be >= 0");
  if (params.samples < 1) throw domain_error("sweep: samples must be >= 1");
  std::vector<mpz_class> points;
  points.reserve(static_cast<size_t>(params.samples));
  std::uint64_t state = params.seed;
  mpfr_prec_t ip = integer_precision_for(params.logN_hi);
  for (long i = 0; i < params.samples; ++i) {
    mpq_class u = draw_uniform(params.logN_lo, params.logN_hi, state);
    mpz_class n = exp_to_int(u, ip, /*take_ceil=*/false);
    if (n < 1) n = 1;
    points.push_back(std::move(n));
  }
  if (params.include_scf) {
    // walk the convergents until their denominators leave the window
    for (long count = 16;; count *= 2) {
      auto conv = scf_convergents(arg, count, 256);
      bool past_end = false;
      for (const auto& [pnum, q] : conv) {
        (void)pnum;
        if (q < 1) continue;
        double lq = mpfr_get_d(log_z(q, 64).mid(), MPFR_RNDN);
        if (lq > params.logN_hi) {
          past_end = true;
          break;
        }
        if (lq >= params.logN_lo) points.push_back(q);
      }
      if (past_end || count >= 4096) break;
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<VerifyRecord> sweep(const RationalExponent& arg, const SweepParams& params) {
  std::vector<mpz_class> points = sweep_sample_points(arg, params);
  std::vector<VerifyRecord> records(points.size());
  const long total = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic) if (params.parallel)
  for (long i = 0; i < total; ++i) {
    try {
      records[i] = check_lower_bound(arg, points[i], params.precision, std::nullopt,
                                     params.max_precision);
    } catch (const std::exception&) {
      records[i].s = arg.s;
      records[i].t = arg.t;
      records[i].N = points[i];
      records[i].M = 1;
      records[i].bound = "general";
      records[i].verdict = Verdict::undecided;
    }
  }
  return records;
}

namespace {

VerifyRecord check_e3_at(const mpz_class& N, mpfr_prec_t start_precision,
                         mpfr_prec_t max_precision) {
  RationalExponent arg(3, 1);
  VerifyRecord rec;
  rec.s = 3;
  rec.t = 1;
  rec.N = N;
  rec.bound = "e3";
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(start_precision, 256);;
       p = std::min<mpfr_prec_t>(p * 2, max_precision)) {
    rec.precision_used = p;
    Ball est = exp_st(arg, p);
    Ball nx = mul_z(est, N);
    auto nearest = nearest_integer(nx);
    if (!nearest) {
      if (p >= max_precision) {
        rec.verdict = Verdict::undecided;
        return rec;
      }
      continue;
    }
    rec.M = *nearest;
    Ball lambda = abs(sub_z(nx, rec.M));
    rec.log_N = log_z(N, p);
    try {
      Corollary4Bound b = corollary4_bound(rec.log_N, p);
      rec.threshold_ok = true;
      rec.log_abs_lambda_over_N = log(lambda) - rec.log_N;
      rec.log_lower_bound = -(log(Ball::exact(b.factor, p)) +
                              b.exponent * rec.log_N + log(b.polylog));
    } catch (const domain_error&) {
      if (p >= max_precision) {
        rec.verdict = Verdict::undecided;
        return rec;
      }
      continue;
    }
    rec.margin = rec.log_abs_lambda_over_N - rec.log_lower_bound;
    Sign s = certify_sign(rec.margin);
    if (s == Sign::positive) {
      rec.verdict = Verdict::holds;
      return rec;
    }
    if (s == Sign::negative) {
      rec.verdict = Verdict::violated;
      return rec;
    }
    if (p >= max_precision) {
      rec.verdict = Verdict::undecided;
      return rec;
    }
  }
}

std::vector<VerifyRecord> check_e3_points(std::vector<mpz_class> points,
                                          mpfr_prec_t precision,
                                          mpfr_prec_t max_precision, bool parallel) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<VerifyRecord> records(points.size());
  const long total = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < total; ++i) {
    try {
      records[i] = check_e3_at(points[i], precision, max_precision);
    } catch (const std::exception&) {
      records[i].s = 3;
      records[i].t = 1;
      records[i].N = points[i];
      records[i].M = 1;
      records[i].bound = "e3";
      records[i].verdict = Verdict::undecided;
    }
  }
  return records;
}

}  // namespace

std::vector<VerifyRecord> check_corollary4(double logN_lo, double logN_hi, long samples,
                                           std::uint64_t seed, mpfr_prec_t precision,
                                           mpfr_prec_t max_precision, bool parallel) {
  if (logN_lo < 983) throw domain_error("check_corollary4 requires logN_lo >= 983");
  if (logN_lo > logN_hi) throw domain_error("check_corollary4: empty logN range");
  if (samples < 1) throw domain_error("check_corollary4: samples must be >= 1");
  std::vector<mpz_class> points;
  points.reserve(static_cast<size_t>(samples));
  std::uint64_t state = seed;
  mpfr_prec_t ip = integer_precision_for(logN_hi);
  for (long i = 0; i < samples; ++i) {
    mpq_class u = draw_uniform(logN_lo, logN_hi, state);
    points.push_back(exp_to_int(u, ip, /*take_ceil=*/true));
  }
  return check_e3_points(std::move(points), precision, max_precision, parallel);
}

std::vector<VerifyRecord> check_corollary4(const std::vector<double>& logN_samples,
                                           mpfr_prec_t precision,
                                           mpfr_prec_t max_precision, bool parallel) {
  std::vector<mpz_class> points;
  points.reserve(logN_samples.size());
  for (double u : logN_samples) {
    if (u < 983) throw domain_error("check_corollary4 requires logN >= 983");
    points.push_back(exp_to_int(mpq_class(u), integer_precision_for(u), true));
  }
  return check_e3_points(std::move(points), precision, max_precision, parallel);
}

}  // namespace ratexp
