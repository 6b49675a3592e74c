#include "tms/report_io.hpp"

#include <cstdio>

namespace tms {

namespace {

void append_score(std::string& row, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), ",%.6f", value);
    row += buf;
}

} // namespace

void write_csv_header(std::ostream& out) {
    out << "ts,device,evaluator,sbt,bbt,abt,lta,ut,ts_score,"
           "sbt_i,sbt_v,bbt_c,bbt_n,bbt_m,sra_n,accen\n";
}

std::string csv_row(const TrustReport& r) {
    std::string row = std::to_string(r.at);
    row += ',';
    row += r.device;
    row += ',';
    row += r.evaluator_owner;
    for (double v : {r.sbt, r.bbt, r.abt, r.lta, r.ut, r.ts,
                     r.sbt_i, r.sbt_v, r.bbt_c, r.bbt_n, r.bbt_m, r.sra_n, r.accen}) {
        append_score(row, v);
    }
    row += '\n';
    return row;
}

void write_csv_row(std::ostream& out, const TrustReport& report) {
    out << csv_row(report);
}

nlohmann::json report_to_json(const TrustReport& r) {
    return nlohmann::json{{"ts", r.at},
                          {"device", r.device},
                          {"evaluator", r.evaluator_owner},
                          {"sbt", r.sbt},
                          {"bbt", r.bbt},
                          {"abt", r.abt},
                          {"lta", r.lta},
                          {"ut", r.ut},
                          {"ts_score", r.ts},
                          {"breakdown",
                           {{"sbt_i", r.sbt_i},
                            {"sbt_v", r.sbt_v},
                            {"bbt_c", r.bbt_c},
                            {"bbt_n", r.bbt_n},
                            {"bbt_m", r.bbt_m},
                            {"sra_n", r.sra_n},
                            {"accen", r.accen}}}};
}

void write_jsonl_row(std::ostream& out, const TrustReport& report) {
    out << report_to_json(report).dump() << '\n';
}

} // namespace tms
