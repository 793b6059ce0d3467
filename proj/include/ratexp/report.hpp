#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ratexp/bounds.hpp"
#include "ratexp/exp_cf.hpp"
#include "ratexp/verify.hpp"

namespace ratexp {

using ordered_json = nlohmann::ordered_json;

// Balls serialize as {"mid": <decimal>, "rad": <decimal>, "prec": <bits>};
// the decimal strings recover the exact values when re-read at `prec`.
ordered_json ball_to_json(const Ball& b);
Ball ball_from_json(const nlohmann::json& j);

ordered_json row_to_json(const ConvergentRow& r);
ConvergentRow row_from_json(const nlohmann::json& j);

ordered_json record_to_json(const VerifyRecord& r);
VerifyRecord record_from_json(const nlohmann::json& j);

ordered_json bound_report_to_json(const BoundReport& r);

// CSV: one header line plus one line per record; ball fields expand to
// <name>_mid, <name>_rad, <name>_prec columns. No quoting is ever needed.
std::string rows_to_csv(const std::vector<ConvergentRow>& rows);
std::string records_to_csv(const std::vector<VerifyRecord>& records);

// Top-level report object: {"schema_version": "1", "command": ...,
// "params": {...}, "records": [...]}.
ordered_json make_report(const std::string& command, ordered_json params,
                         ordered_json records);

bool verify_records_equal(const VerifyRecord& a, const VerifyRecord& b);

}  // namespace ratexp
