#pragma once

#include "tms/errors.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace tms {

using DeviceId = std::string;
using UserId = std::string;

enum class AttackVector { Network, Adjacent, Local, Physical };

/// True when the vector permits remote exploitation (Network or Adjacent).
bool remotely_exploitable(AttackVector av);

/// Case-insensitive parse; accepts "ADJACENT_NETWORK" as an alias of Adjacent.
/// Throws UnknownAttackVector for anything else.
AttackVector attack_vector_from_string(std::string_view s);
const char* to_string(AttackVector av);

/// Perceived value of a device to its owner, most critical first.
enum class SeverityLevel { Catastrophic, Severe, Normal, Minor, Negligible };

SeverityLevel severity_from_string(std::string_view s);
const char* to_string(SeverityLevel level);

/// Fuzzy risk label produced by the risk assessment matrix.
enum class RiskLabel { Catastrophic, Serious, Medium, Low, Negligible };

const char* to_string(RiskLabel label);

struct Vulnerability {
    std::string cve_id;
    AttackVector attack_vector = AttackVector::Network;
    double impact = 0.0;         // [0, 10]
    double exploitability = 0.0; // [0, 10], used only by the optional PRC estimator
};

struct DeviceState {
    DeviceId id;
    std::optional<UserId> owner; // nullopt: owner identity not known
    SeverityLevel severity = SeverityLevel::Normal;
    std::map<std::string, Vulnerability> vulnerabilities; // keyed by cve_id
    double prc = 0.0;   // probability of compromise enabling remote code execution
    double sbt_i = 1.0; // integrity flag, 0 or 1
    double bbt_c = 1.0; // compliance score
    double bbt_n = 1.0; // nominal-behaviour score
    double bbt_m = 1.0; // malicious-activity flag, 0 or 1
};

enum class SbtVConvention {
    Decreasing,   // exp(-ovim): vulnerability-free device scores 1 (default)
    PaperLiteral, // 1 - exp(-ovim)
};

const char* to_string(SbtVConvention c);
SbtVConvention sbt_v_convention_from_string(std::string_view s);

/// All engine tunables. validate() enforces the cross-field constraints;
/// every loader calls it before the params are used.
struct EngineParams {
    double w_s = 0.3;
    double w_b = 0.5;
    double w_a = 0.2;
    double tsrr_compliance = 0.001; // per second
    double tsrr_nominality = 0.002; // per second
    double ut_known = 0.5;
    double ut_unknown = 0.2;
    std::array<double, 4> prob_thresholds{0.2, 0.4, 0.6, 0.8};
    SbtVConvention sbt_v_convention = SbtVConvention::Decreasing;
    bool auto_prc = false; // derive PRC from vulnerability exploitability scores

    /// Throws InvalidParams unless weights sum to 1 with w_b dominant,
    /// ut_known >= ut_unknown, rates are non-negative and thresholds
    /// are strictly ascending within (0, 1).
    void validate() const;
};

/// Directed, weighted user-to-user trust assertions plus the registry of
/// user identities. Deliberately stores only what was asserted: there is
/// no transitive closure and no reverse lookup.
class UserTrustGraph {
public:
    void register_user(const UserId& id, bool known); // DuplicateUser
    bool is_registered(const UserId& id) const;
    void require_registered(const UserId& id) const; // UnknownUser
    bool is_known(const UserId& id) const;

    /// Records from's confidence in to. Overwrites any previous assertion
    /// for the same ordered pair; the reverse direction is untouched.
    void assert_trust(const UserId& from, const UserId& to, double level);

    /// The asserted level for the ordered pair, if any.
    std::optional<double> trust(const UserId& from, const UserId& to) const;

    const std::map<std::pair<UserId, UserId>, double>& assertions() const { return assertions_; }
    const std::map<UserId, bool>& users() const { return users_; }

private:
    std::map<std::pair<UserId, UserId>, double> assertions_;
    std::map<UserId, bool> users_; // id -> identity known
};

/// Directed device reachability; out-neighbors are the devices an attacker
/// could reach from the key device.
class TopologyGraph {
public:
    void add_link(const DeviceId& from, const DeviceId& to); // SelfLink
    void remove_link(const DeviceId& from, const DeviceId& to); // absent link is a no-op
    const std::set<DeviceId>& neighbors(const DeviceId& from) const;
    const std::map<DeviceId, std::set<DeviceId>>& adjacency() const { return adjacency_; }

private:
    std::map<DeviceId, std::set<DeviceId>> adjacency_;
};

/// The engine's authoritative state. Mutations funnel through the event
/// engine's single writer; everything here is plain data plus registry
/// bookkeeping.
struct EngineState {
    EngineParams params;
    UserTrustGraph users;
    std::map<DeviceId, DeviceState> devices;
    TopologyGraph topology;
    std::int64_t clock_ms = 0; // timestamp of the last applied event

    /// Creates a pristine device: every partial score starts at 1, no
    /// vulnerabilities, prc 0. Throws DuplicateDevice, and UnknownUser if
    /// the owner is named but not registered.
    DeviceState& register_device(const DeviceId& id, std::optional<UserId> owner,
                                 SeverityLevel severity);

    DeviceState& device(const DeviceId& id);             // UnknownDevice
    const DeviceState& device(const DeviceId& id) const; // UnknownDevice
    bool has_device(const DeviceId& id) const;
};

} // namespace tms
