#pragma once

#include "tms/aggregation.hpp"

#include <ostream>
#include <string>

#include <json.hpp>

namespace tms {

/// Column order is part of the output contract:
/// ts,device,evaluator,sbt,bbt,abt,lta,ut,ts_score,sbt_i,sbt_v,bbt_c,bbt_n,bbt_m,sra_n,accen
/// Scores carry six decimal digits; JSONL rows keep full precision.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const TrustReport& report);

std::string csv_row(const TrustReport& report);

nlohmann::json report_to_json(const TrustReport& report);
void write_jsonl_row(std::ostream& out, const TrustReport& report);

} // namespace tms
