#include "tms/event_engine.hpp"

#include "tms/risk_trust.hpp"
#include "tms/status_trust.hpp"

#include <sstream>

namespace tms {

using nlohmann::json;

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::DeviceRegistered: return "DeviceRegistered";
        case EventKind::UserRegistered: return "UserRegistered";
        case EventKind::UserTrustAsserted: return "UserTrustAsserted";
        case EventKind::VulnerabilityDetected: return "VulnerabilityDetected";
        case EventKind::VulnerabilityMitigated: return "VulnerabilityMitigated";
        case EventKind::CompromiseDetected: return "CompromiseDetected";
        case EventKind::HealthRestored: return "HealthRestored";
        case EventKind::NonCompliantFlow: return "NonCompliantFlow";
        case EventKind::MetricObservation: return "MetricObservation";
        case EventKind::AttackLaunched: return "AttackLaunched";
        case EventKind::TopologyLinkAdded: return "TopologyLinkAdded";
        case EventKind::TopologyLinkRemoved: return "TopologyLinkRemoved";
        case EventKind::SeveritySet: return "SeveritySet";
        case EventKind::PrcSet: return "PrcSet";
    }
    return "?";
}

EventKind event_kind_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(EventKind::PrcSet); ++i) {
        const auto kind = static_cast<EventKind>(i);
        if (s == to_string(kind)) return kind;
    }
    throw Error(ErrorCode::MalformedPayload, "unknown event kind: \"" + std::string(s) + "\"");
}

Engine::Engine(EngineState initial) : state_(std::move(initial)) {
    state_.params.validate();
}

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, std::string(what) + " must lie in [0,1]");
    }
}

void require_cvss_range(double v, const char* what) {
    if (!(v >= 0.0 && v <= 10.0)) {
        throw Error(ErrorCode::OutOfRange, std::string(what) + " must lie in [0,10]");
    }
}

// Full payload validation against the current state. Runs before any
// mutation so a rejected event cannot leave a partial transition behind.
struct EventValidator {
    const EngineState& state;

    void require_device(const DeviceId& id) const {
        if (!state.has_device(id)) {
            throw Error(ErrorCode::UnknownDevice, "unknown device: " + id);
        }
    }

    void operator()(const ev::DeviceRegistered& e) const {
        if (e.device.empty()) {
            throw Error(ErrorCode::MalformedPayload, "device id must be non-empty");
        }
        if (state.has_device(e.device)) {
            throw Error(ErrorCode::DuplicateDevice, "device already registered: " + e.device);
        }
        if (e.owner) state.users.require_registered(*e.owner);
        require_unit_interval(e.prc, "prc");
    }
    void operator()(const ev::UserRegistered& e) const {
        if (e.user.empty()) {
            throw Error(ErrorCode::MalformedPayload, "user id must be non-empty");
        }
        if (state.users.is_registered(e.user)) {
            throw Error(ErrorCode::DuplicateUser, "user already registered: " + e.user);
        }
    }
    void operator()(const ev::UserTrustAsserted& e) const {
        if (e.from == e.to) {
            throw Error(ErrorCode::SelfAssertion,
                        "user cannot assert trust towards themselves: " + e.from);
        }
        require_unit_interval(e.level, "trust level");
        state.users.require_registered(e.from);
        state.users.require_registered(e.to);
    }
    void operator()(const ev::VulnerabilityDetected& e) const {
        require_device(e.device);
        if (e.vuln.cve_id.empty()) {
            throw Error(ErrorCode::MalformedPayload, "cve_id must be non-empty");
        }
        require_cvss_range(e.vuln.impact, "impact");
        require_cvss_range(e.vuln.exploitability, "exploitability");
    }
    void operator()(const ev::VulnerabilityMitigated& e) const { require_device(e.device); }
    void operator()(const ev::CompromiseDetected& e) const { require_device(e.device); }
    void operator()(const ev::HealthRestored& e) const { require_device(e.device); }
    void operator()(const ev::NonCompliantFlow& e) const { require_device(e.device); }
    void operator()(const ev::MetricObserved& e) const {
        require_device(e.obs.device);
        if (e.obs.detected_max < 0.0) {
            throw Error(ErrorCode::OutOfRange, "detected_max must be non-negative");
        }
        if (!(e.obs.nominal_high_end > 0.0)) {
            throw Error(ErrorCode::OutOfRange, "nominal_high_end must be positive");
        }
    }
    void operator()(const ev::AttackLaunched& e) const { require_device(e.device); }
    void operator()(const ev::TopologyLinkAdded& e) const {
        if (e.from == e.to) {
            throw Error(ErrorCode::SelfLink, "topology self-loop rejected: " + e.from);
        }
        require_device(e.from);
        require_device(e.to);
    }
    void operator()(const ev::TopologyLinkRemoved& e) const {
        require_device(e.from);
        require_device(e.to);
    }
    void operator()(const ev::SeveritySet& e) const { require_device(e.device); }
    void operator()(const ev::PrcSet& e) const {
        require_device(e.device);
        require_unit_interval(e.prc, "prc");
    }
};

struct EventApplier {
    EngineState& state;

    void refresh_prc(DeviceState& d) const {
        if (state.params.auto_prc) {
            d.prc = estimate_prc(d.vulnerabilities);
        }
    }

    void operator()(const ev::DeviceRegistered& e) const {
        DeviceState& d = state.register_device(e.device, e.owner, e.severity);
        d.prc = e.prc;
    }
    void operator()(const ev::UserRegistered& e) const {
        state.users.register_user(e.user, e.known);
    }
    void operator()(const ev::UserTrustAsserted& e) const {
        state.users.assert_trust(e.from, e.to, e.level);
    }
    void operator()(const ev::VulnerabilityDetected& e) const {
        DeviceState& d = state.device(e.device);
        d.vulnerabilities[e.vuln.cve_id] = e.vuln;
        refresh_prc(d);
    }
    void operator()(const ev::VulnerabilityMitigated& e) const {
        DeviceState& d = state.device(e.device);
        d.vulnerabilities.erase(e.cve_id); // mitigating an unknown cve is a no-op
        refresh_prc(d);
    }
    void operator()(const ev::CompromiseDetected& e) const {
        on_compromise_detected(state.device(e.device));
    }
    void operator()(const ev::HealthRestored& e) const {
        on_health_restored(state.device(e.device));
    }
    void operator()(const ev::NonCompliantFlow& e) const {
        on_noncompliant_flow(state.device(e.device));
    }
    void operator()(const ev::MetricObserved& e) const {
        on_metric_observation(state.device(e.obs.device), e.obs);
    }
    void operator()(const ev::AttackLaunched& e) const {
        on_attack_launched(state.device(e.device));
    }
    void operator()(const ev::TopologyLinkAdded& e) const {
        state.topology.add_link(e.from, e.to);
    }
    void operator()(const ev::TopologyLinkRemoved& e) const {
        state.topology.remove_link(e.from, e.to);
    }
    void operator()(const ev::SeveritySet& e) const {
        state.device(e.device).severity = e.severity;
    }
    void operator()(const ev::PrcSet& e) const {
        state.device(e.device).prc = e.prc;
    }
};

} // namespace

void Engine::validate(const SecurityEvent& event) const {
    if (event.ts < 0) {
        throw Error(ErrorCode::MalformedPayload, "event timestamp must be non-negative");
    }
    if (event.ts < state_.clock_ms) {
        std::ostringstream msg;
        msg << "event at ts=" << event.ts << " precedes engine clock " << state_.clock_ms;
        throw Error(ErrorCode::ReorderedEvent, msg.str());
    }
    std::visit(EventValidator{state_}, event.payload);
}

void Engine::advance_clock(std::int64_t ts) {
    const double elapsed_seconds = static_cast<double>(ts - state_.clock_ms) / 1000.0;
    if (elapsed_seconds > 0.0) {
        for (auto& [id, device] : state_.devices) {
            restore_tick(device, elapsed_seconds, state_.params);
        }
    }
    state_.clock_ms = ts;
}

void Engine::transition(const SecurityEvent& event) {
    std::visit(EventApplier{state_}, event.payload);
}

void Engine::apply(const SecurityEvent& event) {
    validate(event);
    advance_clock(event.ts);
    transition(event);
}

EngineState Engine::projected_state(std::int64_t at_ms) const {
    if (at_ms < state_.clock_ms) {
        std::ostringstream msg;
        msg << "query at ts=" << at_ms << " precedes engine clock " << state_.clock_ms;
        throw Error(ErrorCode::ReorderedEvent, msg.str());
    }
    EngineState projected = state_;
    const double elapsed_seconds = static_cast<double>(at_ms - projected.clock_ms) / 1000.0;
    if (elapsed_seconds > 0.0) {
        for (auto& [id, device] : projected.devices) {
            restore_tick(device, elapsed_seconds, projected.params);
        }
    }
    projected.clock_ms = at_ms;
    return projected;
}

TrustReport Engine::report(const DeviceId& device, const UserId& evaluator) const {
    return compute_ts(device, evaluator, state_);
}

TrustReport Engine::report_at(const DeviceId& device, const UserId& evaluator,
                              std::int64_t at_ms) const {
    return compute_ts(device, evaluator, projected_state(at_ms));
}

std::vector<TrustReport> Engine::reports_at(const UserId& evaluator, std::int64_t at_ms) const {
    const EngineState projected = projected_state(at_ms);
    std::vector<TrustReport> reports;
    reports.reserve(projected.devices.size());
    for (const auto& [id, device] : projected.devices) {
        reports.push_back(compute_ts(id, evaluator, projected));
    }
    return reports;
}

namespace {

json params_to_json(const EngineParams& p) {
    return json{{"w_s", p.w_s},
                {"w_b", p.w_b},
                {"w_a", p.w_a},
                {"tsrr_compliance", p.tsrr_compliance},
                {"tsrr_nominality", p.tsrr_nominality},
                {"ut_known", p.ut_known},
                {"ut_unknown", p.ut_unknown},
                {"prob_thresholds", p.prob_thresholds},
                {"sbt_v_convention", to_string(p.sbt_v_convention)},
                {"auto_prc", p.auto_prc}};
}

EngineParams params_from_json(const json& doc) {
    EngineParams p;
    p.w_s = doc.at("w_s").get<double>();
    p.w_b = doc.at("w_b").get<double>();
    p.w_a = doc.at("w_a").get<double>();
    p.tsrr_compliance = doc.at("tsrr_compliance").get<double>();
    p.tsrr_nominality = doc.at("tsrr_nominality").get<double>();
    p.ut_known = doc.at("ut_known").get<double>();
    p.ut_unknown = doc.at("ut_unknown").get<double>();
    const auto& thresholds = doc.at("prob_thresholds");
    if (!thresholds.is_array() || thresholds.size() != 4) {
        throw Error(ErrorCode::SnapshotFormatError, "prob_thresholds must hold four values");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        p.prob_thresholds[i] = thresholds[i].get<double>();
    }
    p.sbt_v_convention = sbt_v_convention_from_string(doc.at("sbt_v_convention").get<std::string>());
    p.auto_prc = doc.value("auto_prc", false);
    return p;
}

} // namespace

json Engine::snapshot() const {
    json devices = json::array();
    for (const auto& [id, d] : state_.devices) {
        json vulns = json::array();
        for (const auto& [cve, v] : d.vulnerabilities) {
            vulns.push_back({{"cve_id", v.cve_id},
                             {"attack_vector", to_string(v.attack_vector)},
                             {"impact", v.impact},
                             {"exploitability", v.exploitability}});
        }
        devices.push_back({{"id", d.id},
                           {"owner", d.owner ? json(*d.owner) : json(nullptr)},
                           {"severity", to_string(d.severity)},
                           {"prc", d.prc},
                           {"sbt_i", d.sbt_i},
                           {"bbt_c", d.bbt_c},
                           {"bbt_n", d.bbt_n},
                           {"bbt_m", d.bbt_m},
                           {"vulnerabilities", std::move(vulns)}});
    }

    json users = json::array();
    for (const auto& [id, known] : state_.users.users()) {
        users.push_back({{"id", id}, {"known", known}});
    }

    json user_trust = json::array();
    for (const auto& [pair, level] : state_.users.assertions()) {
        user_trust.push_back({{"from", pair.first}, {"to", pair.second}, {"level", level}});
    }

    json topology = json::array();
    for (const auto& [from, tos] : state_.topology.adjacency()) {
        for (const auto& to : tos) {
            topology.push_back(json::array({from, to}));
        }
    }

    return json{{"format", 1},
                {"clock_ms", state_.clock_ms},
                {"params", params_to_json(state_.params)},
                {"users", std::move(users)},
                {"user_trust", std::move(user_trust)},
                {"devices", std::move(devices)},
                {"topology", std::move(topology)}};
}

Engine Engine::restore(const json& doc) {
    try {
        if (!doc.is_object() || doc.value("format", 0) != 1) {
            throw Error(ErrorCode::SnapshotFormatError, "unsupported snapshot format");
        }
        EngineState state;
        state.params = params_from_json(doc.at("params"));
        state.clock_ms = doc.at("clock_ms").get<std::int64_t>();

        for (const auto& u : doc.at("users")) {
            state.users.register_user(u.at("id").get<std::string>(), u.at("known").get<bool>());
        }
        for (const auto& t : doc.at("user_trust")) {
            state.users.assert_trust(t.at("from").get<std::string>(),
                                     t.at("to").get<std::string>(), t.at("level").get<double>());
        }
        for (const auto& d : doc.at("devices")) {
            std::optional<UserId> owner;
            if (d.contains("owner") && !d["owner"].is_null()) {
                owner = d["owner"].get<std::string>();
            }
            DeviceState& device = state.register_device(
                d.at("id").get<std::string>(), owner,
                severity_from_string(d.at("severity").get<std::string>()));
            device.prc = d.at("prc").get<double>();
            device.sbt_i = d.at("sbt_i").get<double>();
            device.bbt_c = d.at("bbt_c").get<double>();
            device.bbt_n = d.at("bbt_n").get<double>();
            device.bbt_m = d.at("bbt_m").get<double>();
            for (const auto& v : d.at("vulnerabilities")) {
                Vulnerability vuln;
                vuln.cve_id = v.at("cve_id").get<std::string>();
                vuln.attack_vector = attack_vector_from_string(v.at("attack_vector").get<std::string>());
                vuln.impact = v.at("impact").get<double>();
                vuln.exploitability = v.at("exploitability").get<double>();
                device.vulnerabilities[vuln.cve_id] = vuln;
            }
        }
        for (const auto& link : doc.at("topology")) {
            state.topology.add_link(link.at(0).get<std::string>(), link.at(1).get<std::string>());
        }
        return Engine(std::move(state));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SnapshotFormatError, std::string("malformed snapshot: ") + e.what());
    }
}

Engine Engine::restore_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SnapshotFormatError,
                    std::string("snapshot is not valid JSON: ") + e.what());
    }
    return restore(doc);
}

void replay(Engine& engine, std::span<const SecurityEvent> events, const ReplayObserver& observer) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        try {
            engine.apply(events[i]);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "event #" << i << " (ts=" << events[i].ts << ", seq=" << events[i].seq
                << ", kind=" << to_string(events[i].kind()) << "): " << e.what();
            throw Error(e.code(), msg.str());
        }
        if (observer) {
            observer(i, events[i], engine);
        }
    }
}

} // namespace tms
