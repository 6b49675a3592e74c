#pragma once

#include "tms/aggregation.hpp"
#include "tms/behavior_trust.hpp"
#include "tms/core_model.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tms {

enum class EventKind {
    DeviceRegistered,
    UserRegistered,
    UserTrustAsserted,
    VulnerabilityDetected,
    VulnerabilityMitigated,
    CompromiseDetected,
    HealthRestored,
    NonCompliantFlow,
    MetricObservation,
    AttackLaunched,
    TopologyLinkAdded,
    TopologyLinkRemoved,
    SeveritySet,
    PrcSet,
};

const char* to_string(EventKind kind);
EventKind event_kind_from_string(std::string_view s); // MalformedPayload

namespace ev {

struct DeviceRegistered {
    DeviceId device;
    std::optional<UserId> owner;
    SeverityLevel severity = SeverityLevel::Normal;
    double prc = 0.0;
};
struct UserRegistered {
    UserId user;
    bool known = true;
};
struct UserTrustAsserted {
    UserId from;
    UserId to;
    double level = 0.0;
};
struct VulnerabilityDetected {
    DeviceId device;
    Vulnerability vuln;
};
struct VulnerabilityMitigated {
    DeviceId device;
    std::string cve_id;
};
struct CompromiseDetected {
    DeviceId device;
};
struct HealthRestored {
    DeviceId device;
};
struct NonCompliantFlow {
    DeviceId device;
};
struct MetricObserved {
    MetricObservation obs;
};
struct AttackLaunched {
    DeviceId device;
};
struct TopologyLinkAdded {
    DeviceId from;
    DeviceId to;
};
struct TopologyLinkRemoved {
    DeviceId from;
    DeviceId to;
};
struct SeveritySet {
    DeviceId device;
    SeverityLevel severity = SeverityLevel::Normal;
};
struct PrcSet {
    DeviceId device;
    double prc = 0.0;
};

} // namespace ev

using EventPayload =
    std::variant<ev::DeviceRegistered, ev::UserRegistered, ev::UserTrustAsserted,
                 ev::VulnerabilityDetected, ev::VulnerabilityMitigated, ev::CompromiseDetected,
                 ev::HealthRestored, ev::NonCompliantFlow, ev::MetricObserved, ev::AttackLaunched,
                 ev::TopologyLinkAdded, ev::TopologyLinkRemoved, ev::SeveritySet, ev::PrcSet>;

/// Timestamped, typed event: the sole mutation channel of engine state.
/// Streams are totally ordered by (ts, seq).
struct SecurityEvent {
    std::int64_t ts = 0;  // milliseconds since epoch
    std::int64_t seq = 0; // tie-break within equal ts
    EventPayload payload;

    EventKind kind() const { return static_cast<EventKind>(payload.index()); }
};

/// Single-writer event fold over EngineState. Restoration is computed
/// lazily from the clock delta on every event application, which keeps
/// replay a pure, deterministic fold.
class Engine {
public:
    Engine() { state_.params.validate(); }
    explicit Engine(EngineState initial);

    const EngineState& state() const { return state_; }

    /// Validates the event fully, then advances the clock (restoring every
    /// device for the elapsed time) and applies the kind-specific
    /// transition. A rejected event leaves the state untouched.
    void apply(const SecurityEvent& event);

    /// Report at the current clock.
    TrustReport report(const DeviceId& device, const UserId& evaluator) const;

    /// Report as of a later instant: restoration is projected forward to
    /// `at_ms` without mutating engine state. Throws ReorderedEvent when
    /// `at_ms` precedes the clock.
    TrustReport report_at(const DeviceId& device, const UserId& evaluator,
                          std::int64_t at_ms) const;

    /// Reports for every registered device (sorted by id) as of `at_ms`.
    std::vector<TrustReport> reports_at(const UserId& evaluator, std::int64_t at_ms) const;

    nlohmann::json snapshot() const;
    static Engine restore(const nlohmann::json& doc);    // SnapshotFormatError
    static Engine restore_text(const std::string& text); // SnapshotFormatError

private:
    EngineState state_;

    void validate(const SecurityEvent& event) const;
    void advance_clock(std::int64_t ts);
    void transition(const SecurityEvent& event);
    EngineState projected_state(std::int64_t at_ms) const;
};

/// Folds an ordered stream into the engine. The callback (when set) runs
/// after each successful application. Errors are rethrown with the event
/// index attached.
using ReplayObserver =
    std::function<void(std::size_t index, const SecurityEvent& event, const Engine& engine)>;

void replay(Engine& engine, std::span<const SecurityEvent> events,
            const ReplayObserver& observer = {});

} // namespace tms
