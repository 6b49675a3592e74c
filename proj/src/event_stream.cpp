#include "tms/event_stream.hpp"

#include <algorithm>
#include <fstream>

namespace tms {

using nlohmann::json;

namespace {

std::string get_string(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_string()) {
        throw Error(ErrorCode::MalformedPayload,
                    std::string("missing or non-string field \"") + field + "\"");
    }
    return doc[field].get<std::string>();
}

double get_number(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number()) {
        throw Error(ErrorCode::MalformedPayload,
                    std::string("missing or non-numeric field \"") + field + "\"");
    }
    return doc[field].get<double>();
}

EventPayload payload_from_json(EventKind kind, const json& doc) {
    switch (kind) {
        case EventKind::DeviceRegistered: {
            ev::DeviceRegistered e;
            e.device = get_string(doc, "device");
            if (doc.contains("owner") && !doc["owner"].is_null()) {
                e.owner = doc["owner"].get<std::string>();
            }
            e.severity = severity_from_string(get_string(doc, "severity"));
            e.prc = doc.contains("prc") ? get_number(doc, "prc") : 0.0;
            return e;
        }
        case EventKind::UserRegistered: {
            ev::UserRegistered e;
            e.user = get_string(doc, "user");
            e.known = doc.value("known", true);
            return e;
        }
        case EventKind::UserTrustAsserted: {
            ev::UserTrustAsserted e;
            e.from = get_string(doc, "from");
            e.to = get_string(doc, "to");
            e.level = get_number(doc, "level");
            return e;
        }
        case EventKind::VulnerabilityDetected: {
            ev::VulnerabilityDetected e;
            e.device = get_string(doc, "device");
            e.vuln.cve_id = get_string(doc, "cve_id");
            e.vuln.attack_vector = attack_vector_from_string(get_string(doc, "attack_vector"));
            e.vuln.impact = get_number(doc, "impact");
            e.vuln.exploitability =
                doc.contains("exploitability") ? get_number(doc, "exploitability") : 0.0;
            return e;
        }
        case EventKind::VulnerabilityMitigated: {
            ev::VulnerabilityMitigated e;
            e.device = get_string(doc, "device");
            e.cve_id = get_string(doc, "cve_id");
            return e;
        }
        case EventKind::CompromiseDetected:
            return ev::CompromiseDetected{get_string(doc, "device")};
        case EventKind::HealthRestored:
            return ev::HealthRestored{get_string(doc, "device")};
        case EventKind::NonCompliantFlow:
            return ev::NonCompliantFlow{get_string(doc, "device")};
        case EventKind::MetricObservation: {
            ev::MetricObserved e;
            e.obs.device = get_string(doc, "device");
            e.obs.metric_name = get_string(doc, "metric");
            e.obs.detected_max = get_number(doc, "detected_max");
            e.obs.nominal_high_end = get_number(doc, "nominal_high_end");
            return e;
        }
        case EventKind::AttackLaunched:
            return ev::AttackLaunched{get_string(doc, "device")};
        case EventKind::TopologyLinkAdded:
            return ev::TopologyLinkAdded{get_string(doc, "from"), get_string(doc, "to")};
        case EventKind::TopologyLinkRemoved:
            return ev::TopologyLinkRemoved{get_string(doc, "from"), get_string(doc, "to")};
        case EventKind::SeveritySet: {
            ev::SeveritySet e;
            e.device = get_string(doc, "device");
            e.severity = severity_from_string(get_string(doc, "severity"));
            return e;
        }
        case EventKind::PrcSet: {
            ev::PrcSet e;
            e.device = get_string(doc, "device");
            e.prc = get_number(doc, "prc");
            return e;
        }
    }
    throw Error(ErrorCode::MalformedPayload, "unhandled event kind");
}

struct PayloadToJson {
    json& out;

    void operator()(const ev::DeviceRegistered& e) const {
        out["device"] = e.device;
        out["owner"] = e.owner ? json(*e.owner) : json(nullptr);
        out["severity"] = to_string(e.severity);
        out["prc"] = e.prc;
    }
    void operator()(const ev::UserRegistered& e) const {
        out["user"] = e.user;
        out["known"] = e.known;
    }
    void operator()(const ev::UserTrustAsserted& e) const {
        out["from"] = e.from;
        out["to"] = e.to;
        out["level"] = e.level;
    }
    void operator()(const ev::VulnerabilityDetected& e) const {
        out["device"] = e.device;
        out["cve_id"] = e.vuln.cve_id;
        out["attack_vector"] = to_string(e.vuln.attack_vector);
        out["impact"] = e.vuln.impact;
        out["exploitability"] = e.vuln.exploitability;
    }
    void operator()(const ev::VulnerabilityMitigated& e) const {
        out["device"] = e.device;
        out["cve_id"] = e.cve_id;
    }
    void operator()(const ev::CompromiseDetected& e) const { out["device"] = e.device; }
    void operator()(const ev::HealthRestored& e) const { out["device"] = e.device; }
    void operator()(const ev::NonCompliantFlow& e) const { out["device"] = e.device; }
    void operator()(const ev::MetricObserved& e) const {
        out["device"] = e.obs.device;
        out["metric"] = e.obs.metric_name;
        out["detected_max"] = e.obs.detected_max;
        out["nominal_high_end"] = e.obs.nominal_high_end;
    }
    void operator()(const ev::AttackLaunched& e) const { out["device"] = e.device; }
    void operator()(const ev::TopologyLinkAdded& e) const {
        out["from"] = e.from;
        out["to"] = e.to;
    }
    void operator()(const ev::TopologyLinkRemoved& e) const {
        out["from"] = e.from;
        out["to"] = e.to;
    }
    void operator()(const ev::SeveritySet& e) const {
        out["device"] = e.device;
        out["severity"] = to_string(e.severity);
    }
    void operator()(const ev::PrcSet& e) const {
        out["device"] = e.device;
        out["prc"] = e.prc;
    }
};

} // namespace

SecurityEvent event_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorCode::MalformedPayload, "event must be a JSON object");
    }
    if (!doc.contains("ts") || !doc["ts"].is_number_integer()) {
        throw Error(ErrorCode::MalformedPayload, "missing or non-integer field \"ts\"");
    }
    SecurityEvent event;
    event.ts = doc["ts"].get<std::int64_t>();
    if (event.ts < 0) {
        throw Error(ErrorCode::MalformedPayload, "event timestamp must be non-negative");
    }
    if (doc.contains("seq")) {
        if (!doc["seq"].is_number_integer()) {
            throw Error(ErrorCode::MalformedPayload, "field \"seq\" must be an integer");
        }
        event.seq = doc["seq"].get<std::int64_t>();
    }
    const EventKind kind = event_kind_from_string(get_string(doc, "kind"));
    event.payload = payload_from_json(kind, doc);
    return event;
}

json event_to_json(const SecurityEvent& event) {
    json out{{"ts", event.ts}, {"seq", event.seq}, {"kind", to_string(event.kind())}};
    std::visit(PayloadToJson{out}, event.payload);
    return out;
}

SecurityEvent parse_event_line(std::string_view line, std::size_t line_number) {
    json doc;
    try {
        doc = json::parse(line);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedPayload,
                    "line " + std::to_string(line_number) + ": invalid JSON: " + e.what());
    }
    try {
        return event_from_json(doc);
    } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
    }
}

std::vector<SecurityEvent> load_events(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open events file: " + path.string());
    }
    std::vector<SecurityEvent> events;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        events.push_back(parse_event_line(line, line_number));
    }
    return events;
}

void save_events(const std::filesystem::path& path, std::span<const SecurityEvent> events) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open output file: " + path.string());
    }
    for (const auto& event : events) {
        out << event_to_json(event).dump() << '\n';
    }
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing events to " + path.string());
    }
}

void sort_events(std::vector<SecurityEvent>& events) {
    std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        return a.ts != b.ts ? a.ts < b.ts : a.seq < b.seq;
    });
}

} // namespace tms
