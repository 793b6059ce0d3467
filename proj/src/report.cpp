#include "ratexp/report.hpp"

#include <sstream>

namespace ratexp {
namespace {

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  return Verdict::undecided;
}

mpz_class mpz_from_string(const std::string& s) { return mpz_class(s, 10); }

}  // namespace

ordered_json ball_to_json(const Ball& b) {
  return ordered_json{{"mid", b.mid_string()},
                      {"rad", b.rad_string()},
                      {"prec", static_cast<long>(b.precision())}};
}

Ball ball_from_json(const nlohmann::json& j) {
  mpfr_prec_t prec = j.at("prec").get<long>();
  Ball b(prec);
  std::string mid = j.at("mid").get<std::string>();
  std::string rad = j.at("rad").get<std::string>();
  // round to nearest on both: the emitted digit strings recover the exact
  // mid and rad values under nearest rounding at the stored precision
  mpfr_set_str(b.mid(), mid.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(b.rad(), rad.c_str(), 10, MPFR_RNDN);
  return b;
}

ordered_json row_to_json(const ConvergentRow& r) {
  return ordered_json{{"n", r.n},
                      {"A", r.A.get_str()},
                      {"B", r.B.get_str()},
                      {"Cplus", r.Cplus.get_str()},
                      {"Cminus", r.Cminus.get_str()},
                      {"D", r.D.get_str()},
                      {"J", r.J.get_str()},
                      {"H", r.H.get_str()}};
}

ConvergentRow row_from_json(const nlohmann::json& j) {
  ConvergentRow r;
  r.n = j.at("n").get<long>();
  r.A = mpz_from_string(j.at("A").get<std::string>());
  r.B = mpz_from_string(j.at("B").get<std::string>());
  r.Cplus = mpz_from_string(j.at("Cplus").get<std::string>());
  r.Cminus = mpz_from_string(j.at("Cminus").get<std::string>());
  r.D = mpz_from_string(j.at("D").get<std::string>());
  r.J = mpz_from_string(j.at("J").get<std::string>());
  r.H = mpz_from_string(j.at("H").get<std::string>());
  return r;
}

ordered_json record_to_json(const VerifyRecord& r) {
  return ordered_json{{"s", r.s.get_str()},
                      {"t", r.t.get_str()},
                      {"N", r.N.get_str()},
                      {"M", r.M.get_str()},
                      {"bound", r.bound},
                      {"log_N", ball_to_json(r.log_N)},
                      {"log_abs_lambda_over_N", ball_to_json(r.log_abs_lambda_over_N)},
                      {"log_lower_bound", ball_to_json(r.log_lower_bound)},
                      {"margin", ball_to_json(r.margin)},
                      {"verdict", to_string(r.verdict)},
                      {"threshold_ok", r.threshold_ok},
                      {"precision_used", static_cast<long>(r.precision_used)}};
}

VerifyRecord record_from_json(const nlohmann::json& j) {
  VerifyRecord r;
  r.s = mpz_from_string(j.at("s").get<std::string>());
  r.t = mpz_from_string(j.at("t").get<std::string>());
  r.N = mpz_from_string(j.at("N").get<std::string>());
  r.M = mpz_from_string(j.at("M").get<std::string>());
  r.bound = j.at("bound").get<std::string>();
  r.log_N = ball_from_json(j.at("log_N"));
  r.log_abs_lambda_over_N = ball_from_json(j.at("log_abs_lambda_over_N"));
  r.log_lower_bound = ball_from_json(j.at("log_lower_bound"));
  r.margin = ball_from_json(j.at("margin"));
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.threshold_ok = j.at("threshold_ok").get<bool>();
  r.precision_used = j.at("precision_used").get<long>();
  return r;
}

ordered_json bound_report_to_json(const BoundReport& r) {
  return ordered_json{{"s", r.s.get_str()},
                      {"t", r.t.get_str()},
                      {"logN", ball_to_json(r.logN)},
                      {"zeta", ball_to_json(r.zeta)},
                      {"bigZ", ball_to_json(r.bigZ)},
                      {"mu", ball_to_json(r.mu)},
                      {"log_lower_bound", ball_to_json(r.log_lower_bound)},
                      {"threshold_ok", r.threshold_ok},
                      {"precision", static_cast<long>(r.precision)}};
}

std::string rows_to_csv(const std::vector<ConvergentRow>& rows) {
  std::ostringstream out;
  out << "n,A,B,Cplus,Cminus,D,J,H\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.A.get_str() << ',' << r.B.get_str() << ','
        << r.Cplus.get_str() << ',' << r.Cminus.get_str() << ',' << r.D.get_str()
        << ',' << r.J.get_str() << ',' << r.H.get_str() << '\n';
  }
  return out.str();
}

namespace {

void csv_ball(std::ostringstream& out, const Ball& b) {
  out << ',' << b.mid_string() << ',' << b.rad_string() << ','
      << static_cast<long>(b.precision());
}

}  // namespace

std::string records_to_csv(const std::vector<VerifyRecord>& records) {
  std::ostringstream out;
  out << "s,t,N,M,bound"
      << ",log_N_mid,log_N_rad,log_N_prec"
      << ",log_abs_lambda_over_N_mid,log_abs_lambda_over_N_rad,log_abs_lambda_over_N_prec"
      << ",log_lower_bound_mid,log_lower_bound_rad,log_lower_bound_prec"
      << ",margin_mid,margin_rad,margin_prec"
      << ",verdict,threshold_ok,precision_used\n";
  for (const auto& r : records) {
    out << r.s.get_str() << ',' << r.t.get_str() << ',' << r.N.get_str() << ','
        << r.M.get_str() << ',' << r.bound;
    csv_ball(out, r.log_N);
    csv_ball(out, r.log_abs_lambda_over_N);
    csv_ball(out, r.log_lower_bound);
    csv_ball(out, r.margin);
    out << ',' << to_string(r.verdict) << ',' << (r.threshold_ok ? "true" : "false")
        << ',' << static_cast<long>(r.precision_used) << '\n';
  }
  return out.str();
}

ordered_json make_report(const std::string& command, ordered_json params,
                         ordered_json records) {
  return ordered_json{{"schema_version", "1"},
                      {"command", command},
                      {"params", std::move(params)},
                      {"records", std::move(records)}};
}

namespace {

bool balls_equal(const Ball& a, const Ball& b) {
  if (a.precision() != b.precision()) return false;
  return mpfr_equal_p(a.mid(), b.mid()) && mpfr_equal_p(a.rad(), b.rad());
}

}  // namespace

bool verify_records_equal(const VerifyRecord& a, const VerifyRecord& b) {
  return a.s == b.s && a.t == b.t && a.N == b.N && a.M == b.M && a.bound == b.bound &&
         balls_equal(a.log_N, b.log_N) &&
         balls_equal(a.log_abs_lambda_over_N, b.log_abs_lambda_over_N) &&
         balls_equal(a.log_lower_bound, b.log_lower_bound) &&
         balls_equal(a.margin, b.margin) && a.verdict == b.verdict &&
         a.threshold_ok == b.threshold_ok && a.precision_used == b.precision_used;
}

}  // namespace ratexp
