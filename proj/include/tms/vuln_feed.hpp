#pragma once

#include "tms/core_model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace tms {

/// One record from the local NVD-subset feed. attack_vector is kept raw
/// here; to_vulnerability performs the enum mapping.
struct CveRecord {
    std::string cve_id;
    std::string attack_vector;
    double impact_score = 0.0;
    double exploitability_score = 0.0;
};

/// Parses a feed file: a flat JSON array of records with fields cve_id,
/// attackVector, impactScore, exploitabilityScore. Throws FeedParseError
/// with record context, or UnknownAttackVector.
std::vector<CveRecord> load_feed(const std::filesystem::path& path);

/// Same, from already-read text.
std::vector<CveRecord> parse_feed(const std::string& text);

/// Serializes records back to the feed format; parse_feed(serialize_feed(r)) == r.
std::string serialize_feed(const std::vector<CveRecord>& records);

Vulnerability to_vulnerability(const CveRecord& record);

} // namespace tms
