#include "tms/vuln_feed.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tms {

namespace {

using nlohmann::json;

double cvss_score_field(const json& rec, const char* field, std::size_t index) {
    if (!rec.contains(field) || !rec[field].is_number()) {
        std::ostringstream msg;
        msg << "record " << index << ": missing or non-numeric field \"" << field << "\"";
        throw Error(ErrorCode::FeedParseError, msg.str());
    }
    const double value = rec[field].get<double>();
    if (!(value >= 0.0 && value <= 10.0)) {
        std::ostringstream msg;
        msg << "record " << index << ": " << field << " " << value << " outside CVSS range [0,10]";
        throw Error(ErrorCode::FeedParseError, msg.str());
    }
    return value;
}

CveRecord parse_record(const json& rec, std::size_t index) {
    if (!rec.is_object()) {
        throw Error(ErrorCode::FeedParseError,
                    "record " + std::to_string(index) + ": expected a JSON object");
    }
    CveRecord out;
    if (!rec.contains("cve_id") || !rec["cve_id"].is_string() ||
        rec["cve_id"].get<std::string>().empty()) {
        throw Error(ErrorCode::FeedParseError,
                    "record " + std::to_string(index) + ": missing or empty cve_id");
    }
    out.cve_id = rec["cve_id"].get<std::string>();
    if (!rec.contains("attackVector") || !rec["attackVector"].is_string()) {
        throw Error(ErrorCode::FeedParseError,
                    "record " + std::to_string(index) + ": missing attackVector");
    }
    out.attack_vector = rec["attackVector"].get<std::string>();
    attack_vector_from_string(out.attack_vector); // reject unknown vectors at load time
    out.impact_score = cvss_score_field(rec, "impactScore", index);
    out.exploitability_score = cvss_score_field(rec, "exploitabilityScore", index);
    return out;
}

} // namespace

std::vector<CveRecord> parse_feed(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::FeedParseError, std::string("feed is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::FeedParseError, "feed must be a JSON array of records");
    }
    std::vector<CveRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        records.push_back(parse_record(doc[i], i));
    }
    return records;
}

std::vector<CveRecord> load_feed(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::FeedParseError, "cannot open feed file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_feed(buf.str());
}

std::string serialize_feed(const std::vector<CveRecord>& records) {
    json doc = json::array();
    for (const auto& r : records) {
        doc.push_back({{"cve_id", r.cve_id},
                       {"attackVector", r.attack_vector},
                       {"impactScore", r.impact_score},
                       {"exploitabilityScore", r.exploitability_score}});
    }
    return doc.dump(2);
}

Vulnerability to_vulnerability(const CveRecord& record) {
    Vulnerability v;
    v.cve_id = record.cve_id;
    v.attack_vector = attack_vector_from_string(record.attack_vector);
    v.impact = record.impact_score;
    v.exploitability = record.exploitability_score;
    return v;
}

} // namespace tms
