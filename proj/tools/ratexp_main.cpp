// Command-line front end: evaluates convergent tables, derived constants,
// the z-solver, lower-bound reports and verification sweeps, and emits
// deterministic JSON or CSV reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratexp/bounds.hpp"
#include "ratexp/exp_cf.hpp"
#include "ratexp/padic.hpp"
#include "ratexp/report.hpp"
#include "ratexp/verify.hpp"
#include "ratexp/zsolve.hpp"

namespace {

using ratexp::Ball;
using ratexp::ordered_json;

constexpr long kPrecMin = 64;
constexpr long kPrecMax = 1L << 20;

struct Options {
  long precision = 1024;
  std::string format = "json";
  std::string output_path;
  bool strict = false;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output_path, std::ios::binary);
  if (!out) throw ratexp::domain_error("cannot open output path: " + opt.output_path);
  out << text;
}

int emit_error(const std::string& type, const std::string& message, int code) {
  ordered_json err{{"schema_version", "1"},
                   {"error", ordered_json{{"type", type}, {"message", message}}}};
  std::cout << err.dump(2) << "\n";
  return code;
}

bool any_undecided(const std::vector<ratexp::VerifyRecord>& records) {
  for (const auto& r : records)
    if (r.verdict == ratexp::Verdict::undecided) return true;
  return false;
}

mpz_class parse_mpz(const std::string& text) {
  try {
    return mpz_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw ratexp::domain_error("not a decimal integer: '" + text + "'");
  }
}

int run_convergents(const Options& opt, long s, long t, long n_max) {
  ratexp::RationalExponent arg(s, t);
  auto rows = ratexp::exp_cf_rows(arg, n_max);
  if (opt.format == "csv") {
    write_output(opt, ratexp::rows_to_csv(rows));
    return 0;
  }
  ordered_json records = ordered_json::array();
  for (const auto& r : rows) records.push_back(ratexp::row_to_json(r));
  ordered_json params{{"s", s}, {"t", t}, {"n_max", n_max}};
  write_output(opt, ratexp::make_report("convergents", params, records).dump(2) + "\n");
  return 0;
}

void require_json(const Options& opt) {
  if (opt.format == "csv")
    throw ratexp::domain_error(
        "csv format applies to record-table commands (convergents, verify, corollary4)");
}

int run_invariants(const Options& opt, long s, long t) {
  require_json(opt);
  ratexp::RationalExponent arg(s, t);
  auto pr = ratexp::arithmetic_profile(arg, opt.precision);
  Ball logN1 = ratexp::threshold_log_N1(pr, opt.precision);
  ordered_json rec{{"s", s},
                   {"t", t},
                   {"beta", static_cast<long>(pr.beta)},
                   {"gamma", pr.gamma.get_str()},
                   {"gcd2", pr.gcd2},
                   {"alpha", ratexp::ball_to_json(pr.alpha)},
                   {"alpha_log", ratexp::ball_to_json(pr.alpha_log)},
                   {"sigma", ratexp::ball_to_json(pr.sigma)},
                   {"rho", ratexp::ball_to_json(pr.rho)},
                   {"eta", ratexp::ball_to_json(pr.eta)},
                   {"exp_value", ratexp::ball_to_json(pr.exp_value)},
                   {"log_threshold", ratexp::ball_to_json(logN1)}};
  ordered_json params{{"s", s}, {"t", t}, {"precision", opt.precision}};
  write_output(opt, ratexp::make_report("invariants", params,
                                        ordered_json::array({rec}))
                            .dump(2) +
                        "\n");
  return 0;
}

int run_zsolve(const Options& opt, const std::string& y_text, long count) {
  require_json(opt);
  Ball y = Ball::from_decimal(y_text, opt.precision);
  Ball z = ratexp::xi_inverse(y, opt.precision);
  ordered_json rec{{"y", ratexp::ball_to_json(y)}, {"z", ratexp::ball_to_json(z)}};
  if (count > 0) {
    ordered_json iterates = ordered_json::array();
    ordered_json bounds = ordered_json::array();
    for (long n = 0; n <= count; ++n) {
      iterates.push_back(ratexp::ball_to_json(ratexp::zn_iterate(y, n, opt.precision)));
      bounds.push_back(ratexp::ball_to_json(ratexp::zn_error_bound(y, n, opt.precision)));
    }
    rec["iterates"] = iterates;
    rec["error_bounds"] = bounds;
  }
  ordered_json params{{"y", y_text}, {"count", count}, {"precision", opt.precision}};
  write_output(opt, ratexp::make_report("zsolve", params, ordered_json::array({rec}))
                            .dump(2) +
                        "\n");
  return 0;
}

int run_bound(const Options& opt, long s, long t, double logn) {
  require_json(opt);
  ratexp::RationalExponent arg(s, t);
  auto pr = ratexp::arithmetic_profile(arg, opt.precision);
  auto report = ratexp::bound_report(pr, Ball::exact(logn, opt.precision), opt.precision);
  ordered_json params{{"s", s}, {"t", t}, {"logN", logn}, {"precision", opt.precision}};
  write_output(opt, ratexp::make_report(
                        "bound", params,
                        ordered_json::array({ratexp::bound_report_to_json(report)}))
                            .dump(2) +
                        "\n");
  return 0;
}

int run_compare(const Options& opt, long s, long t, double logn, double delta,
                double eps_z) {
  require_json(opt);
  ratexp::RationalExponent arg(s, t);
  auto pr = ratexp::arithmetic_profile(arg, opt.precision);
  Ball logN = Ball::exact(logn, opt.precision);
  Ball mu = ratexp::exponent_mu(pr, logN, opt.precision);
  auto comp = ratexp::competitor_exponents(pr, logN, Ball::exact(delta, opt.precision),
                                           Ball::exact(eps_z, opt.precision),
                                           opt.precision);
  ordered_json rec{{"mu", ratexp::ball_to_json(mu)},
                   {"bundschuh", ratexp::ball_to_json(comp.bundschuh)},
                   {"shiokawa", ratexp::ball_to_json(comp.shiokawa)},
                   {"zheng", ratexp::ball_to_json(comp.zheng)}};
  ordered_json params{{"s", s},
                      {"t", t},
                      {"logN", logn},
                      {"bundschuh_delta", delta},
                      {"bundschuh_delta_source", "user-supplied"},
                      {"zheng_eps", eps_z},
                      {"zheng_eps_source", "user-supplied"},
                      {"precision", opt.precision}};
  write_output(opt, ratexp::make_report("compare", params, ordered_json::array({rec}))
                            .dump(2) +
                        "\n");
  return 0;
}

int emit_records(const Options& opt, const std::string& command, ordered_json params,
                 const std::vector<ratexp::VerifyRecord>& records) {
  if (opt.format == "csv") {
    write_output(opt, ratexp::records_to_csv(records));
  } else {
    ordered_json recs = ordered_json::array();
    for (const auto& r : records) recs.push_back(ratexp::record_to_json(r));
    write_output(opt,
                 ratexp::make_report(command, std::move(params), recs).dump(2) + "\n");
  }
  if (opt.strict && any_undecided(records)) return 2;
  return 0;
}

int run_verify(const Options& opt, long s, long t, const std::string& n_text,
               const std::string& m_text, double logn_lo, double logn_hi, long samples,
               std::uint64_t seed, bool have_n, bool have_range, bool serial) {
  ratexp::RationalExponent arg(s, t);
  if (have_n == have_range)
    throw ratexp::domain_error("verify requires exactly one of --n or --logn-lo/--logn-hi");
  std::vector<ratexp::VerifyRecord> records;
  ordered_json params{{"s", s}, {"t", t}, {"precision", opt.precision}};
  if (have_n) {
    mpz_class N = parse_mpz(n_text);
    std::optional<mpz_class> M;
    if (!m_text.empty()) M = parse_mpz(m_text);
    records.push_back(ratexp::check_lower_bound(arg, N, opt.precision, M));
    params["N"] = n_text;
    if (!m_text.empty()) params["M"] = m_text;
  } else {
    ratexp::SweepParams sp;
    sp.logN_lo = logn_lo;
    sp.logN_hi = logn_hi;
    sp.samples = samples;
    sp.seed = seed;
    sp.precision = opt.precision;
    sp.parallel = !serial;
    records = ratexp::sweep(arg, sp);
    params["logN_lo"] = logn_lo;
    params["logN_hi"] = logn_hi;
    params["samples"] = samples;
    params["seed"] = seed;
  }
  return emit_records(opt, "verify", std::move(params), records);
}

int run_corollary4(const Options& opt, double logn_lo, double logn_hi, long samples,
                   std::uint64_t seed, bool serial) {
  auto records = ratexp::check_corollary4(logn_lo, logn_hi, samples, seed, opt.precision,
                                          Ball::kMaxPrec, !serial);
  ordered_json params{{"logN_lo", logn_lo},
                      {"logN_hi", logn_hi},
                      {"samples", samples},
                      {"seed", seed},
                      {"precision", opt.precision}};
  return emit_records(opt, "corollary4", std::move(params), records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational approximation bounds for e^(s/t)"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--precision", opt.precision, "working precision in bits")
      ->check(CLI::Range(kPrecMin, kPrecMax))
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", opt.output_path, "write the report to this path");
  app.add_flag("--strict", opt.strict, "exit 2 when any verdict is undecided");

  long s = 0, t = 1, n_max = 0, count = 0, samples = 1;
  double logn = 0, logn_lo = 0, logn_hi = 0, delta = 1.0, eps_z = 1.0;
  std::uint64_t seed = 0;
  std::string y_text, n_text, m_text;
  bool serial = false;

  auto* conv = app.add_subcommand("convergents", "convergent table for e^(s/t)");
  conv->fallthrough();
  conv->add_option("--s", s)->required();
  conv->add_option("--t", t)->required();
  conv->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);

  auto* inv = app.add_subcommand("invariants", "derived arithmetic constants of (s, t)");
  inv->fallthrough();
  inv->add_option("--s", s)->required();
  inv->add_option("--t", t)->required();

  auto* zs = app.add_subcommand("zsolve", "inverse of y = z log z");
  zs->fallthrough();
  zs->add_option("--y", y_text)->required();
  zs->add_option("--count", count, "also emit iterates and error bounds up to n")
      ->check(CLI::NonNegativeNumber);

  auto* bnd = app.add_subcommand("bound", "lower-bound report at one log N");
  bnd->fallthrough();
  bnd->add_option("--s", s)->required();
  bnd->add_option("--t", t)->required();
  bnd->add_option("--logn", logn)->required();

  auto* cmp = app.add_subcommand("compare", "exponent comparison with published bounds");
  cmp->fallthrough();
  cmp->add_option("--s", s)->required();
  cmp->add_option("--t", t)->required();
  cmp->add_option("--logn", logn)->required();
  cmp->add_option("--delta", delta, "Bundschuh shift (user-supplied)")
      ->capture_default_str();
  cmp->add_option("--eps-z", eps_z, "Zheng epsilon (user-supplied)")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "certify the bound at explicit or sampled N");
  ver->fallthrough();
  ver->add_option("--s", s)->required();
  ver->add_option("--t", t)->required();
  auto* n_opt = ver->add_option("--n", n_text, "exact N (decimal)");
  ver->add_option("--m", m_text, "probe this M instead of the nearest integer")
      ->needs(n_opt);
  auto* lo_opt = ver->add_option("--logn-lo", logn_lo);
  ver->add_option("--logn-hi", logn_hi)->needs(lo_opt);
  ver->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed);
  ver->add_flag("--serial", serial, "disable the parallel sweep kernel");

  auto* cor = app.add_subcommand("corollary4", "certify the specialized e^3 bound");
  cor->fallthrough();
  cor->add_option("--logn-lo", logn_lo)->default_val(983.0);
  cor->add_option("--logn-hi", logn_hi)->default_val(3000.0);
  cor->add_option("--samples", samples)->default_val(50)->check(CLI::PositiveNumber);
  cor->add_option("--seed", seed);
  cor->add_flag("--serial", serial, "disable the parallel sweep kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("invalid_config", e.what(), 1);
  }

  try {
    if (conv->parsed()) return run_convergents(opt, s, t, n_max);
    if (inv->parsed()) return run_invariants(opt, s, t);
    if (zs->parsed()) return run_zsolve(opt, y_text, count);
    if (bnd->parsed()) return run_bound(opt, s, t, logn);
    if (cmp->parsed()) return run_compare(opt, s, t, logn, delta, eps_z);
    if (ver->parsed())
      return run_verify(opt, s, t, n_text, m_text, logn_lo, logn_hi, samples, seed,
                        n_opt->count() > 0, lo_opt->count() > 0, serial);
    if (cor->parsed()) return run_corollary4(opt, logn_lo, logn_hi, samples, seed, serial);
  } catch (const ratexp::internal_error& e) {
    return emit_error("internal_consistency", e.what(), 3);
  } catch (const ratexp::precision_exhausted& e) {
    return emit_error("precision_exhausted", e.what(), 2);
  } catch (const ratexp::domain_error& e) {
    return emit_error("invalid_config", e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error("invalid_config", e.what(), 1);
  }
  return emit_error("invalid_config", "no subcommand", 1);
}
