#include "tms/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace tms {

namespace {

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateDevice: return "DuplicateDevice";
        case ErrorCode::DuplicateUser: return "DuplicateUser";
        case ErrorCode::UnknownDevice: return "UnknownDevice";
        case ErrorCode::UnknownUser: return "UnknownUser";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::SelfAssertion: return "SelfAssertion";
        case ErrorCode::SelfLink: return "SelfLink";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::FeedParseError: return "FeedParseError";
        case ErrorCode::UnknownAttackVector: return "UnknownAttackVector";
        case ErrorCode::NegativeElapsed: return "NegativeElapsed";
        case ErrorCode::ReorderedEvent: return "ReorderedEvent";
        case ErrorCode::MalformedPayload: return "MalformedPayload";
        case ErrorCode::SnapshotFormatError: return "SnapshotFormatError";
        case ErrorCode::ScenarioError: return "ScenarioError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

bool remotely_exploitable(AttackVector av) {
    return av == AttackVector::Network || av == AttackVector::Adjacent;
}

AttackVector attack_vector_from_string(std::string_view s) {
    const std::string u = to_upper(s);
    if (u == "NETWORK") return AttackVector::Network;
    if (u == "ADJACENT" || u == "ADJACENT_NETWORK") return AttackVector::Adjacent;
    if (u == "LOCAL") return AttackVector::Local;
    if (u == "PHYSICAL") return AttackVector::Physical;
    throw Error(ErrorCode::UnknownAttackVector, "unknown attack vector: \"" + std::string(s) + "\"");
}

const char* to_string(AttackVector av) {
    switch (av) {
        case AttackVector::Network: return "Network";
        case AttackVector::Adjacent: return "Adjacent";
        case AttackVector::Local: return "Local";
        case AttackVector::Physical: return "Physical";
    }
    return "?";
}

SeverityLevel severity_from_string(std::string_view s) {
    const std::string u = to_upper(s);
    if (u == "CATASTROPHIC") return SeverityLevel::Catastrophic;
    if (u == "SEVERE") return SeverityLevel::Severe;
    if (u == "NORMAL") return SeverityLevel::Normal;
    if (u == "MINOR") return SeverityLevel::Minor;
    if (u == "NEGLIGIBLE") return SeverityLevel::Negligible;
    throw Error(ErrorCode::MalformedPayload, "unknown severity level: \"" + std::string(s) + "\"");
}

const char* to_string(SeverityLevel level) {
    switch (level) {
        case SeverityLevel::Catastrophic: return "Catastrophic";
        case SeverityLevel::Severe: return "Severe";
        case SeverityLevel::Normal: return "Normal";
        case SeverityLevel::Minor: return "Minor";
        case SeverityLevel::Negligible: return "Negligible";
    }
    return "?";
}

const char* to_string(RiskLabel label) {
    switch (label) {
        case RiskLabel::Catastrophic: return "Catastrophic";
        case RiskLabel::Serious: return "Serious";
        case RiskLabel::Medium: return "Medium";
        case RiskLabel::Low: return "Low";
        case RiskLabel::Negligible: return "Negligible";
    }
    return "?";
}

const char* to_string(SbtVConvention c) {
    switch (c) {
        case SbtVConvention::Decreasing: return "Decreasing";
        case SbtVConvention::PaperLiteral: return "PaperLiteral";
    }
    return "?";
}

SbtVConvention sbt_v_convention_from_string(std::string_view s) {
    const std::string u = to_upper(s);
    if (u == "DECREASING") return SbtVConvention::Decreasing;
    if (u == "PAPERLITERAL" || u == "PAPER_LITERAL") return SbtVConvention::PaperLiteral;
    throw Error(ErrorCode::InvalidParams, "unknown sbt_v_convention: \"" + std::string(s) + "\"");
}

void EngineParams::validate() const {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(w_s) || !in_unit(w_b) || !in_unit(w_a)) {
        throw Error(ErrorCode::InvalidParams, "weights must lie in [0,1]");
    }
    if (std::abs(w_s + w_b + w_a - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidParams, "weights must sum to 1");
    }
    if (!(w_b > w_s) || !(w_b > w_a)) {
        throw Error(ErrorCode::InvalidParams, "behaviour weight must dominate: w_b > w_s and w_b > w_a");
    }
    if (tsrr_compliance < 0.0 || tsrr_nominality < 0.0) {
        throw Error(ErrorCode::InvalidParams, "restoration rates must be non-negative");
    }
    if (!in_unit(ut_known) || !in_unit(ut_unknown) || ut_known < ut_unknown) {
        throw Error(ErrorCode::InvalidParams, "require 0 <= ut_unknown <= ut_known <= 1");
    }
    double prev = 0.0;
    for (double t : prob_thresholds) {
        if (t <= prev || t >= 1.0) {
            throw Error(ErrorCode::InvalidParams,
                        "prob_thresholds must be strictly ascending within (0,1)");
        }
        prev = t;
    }
}

void UserTrustGraph::register_user(const UserId& id, bool known) {
    if (id.empty()) {
        throw Error(ErrorCode::MalformedPayload, "user id must be non-empty");
    }
    auto [it, inserted] = users_.emplace(id, known);
    if (!inserted) {
        throw Error(ErrorCode::DuplicateUser, "user already registered: " + id);
    }
}

bool UserTrustGraph::is_registered(const UserId& id) const {
    return users_.count(id) != 0;
}

void UserTrustGraph::require_registered(const UserId& id) const {
    if (!is_registered(id)) {
        throw Error(ErrorCode::UnknownUser, "unknown user: " + id);
    }
}

bool UserTrustGraph::is_known(const UserId& id) const {
    auto it = users_.find(id);
    return it != users_.end() && it->second;
}

void UserTrustGraph::assert_trust(const UserId& from, const UserId& to, double level) {
    if (from == to) {
        throw Error(ErrorCode::SelfAssertion, "user cannot assert trust towards themselves: " + from);
    }
    if (!(level >= 0.0 && level <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "trust level must lie in [0,1]");
    }
    require_registered(from);
    require_registered(to);
    assertions_[{from, to}] = level; // re-assertion overwrites
}

std::optional<double> UserTrustGraph::trust(const UserId& from, const UserId& to) const {
    auto it = assertions_.find({from, to});
    if (it == assertions_.end()) return std::nullopt;
    return it->second;
}

void TopologyGraph::add_link(const DeviceId& from, const DeviceId& to) {
    if (from == to) {
        throw Error(ErrorCode::SelfLink, "topology self-loop rejected: " + from);
    }
    adjacency_[from].insert(to);
}

void TopologyGraph::remove_link(const DeviceId& from, const DeviceId& to) {
    auto it = adjacency_.find(from);
    if (it == adjacency_.end()) return;
    it->second.erase(to);
    if (it->second.empty()) adjacency_.erase(it);
}

const std::set<DeviceId>& TopologyGraph::neighbors(const DeviceId& from) const {
    static const std::set<DeviceId> empty;
    auto it = adjacency_.find(from);
    return it == adjacency_.end() ? empty : it->second;
}

DeviceState& EngineState::register_device(const DeviceId& id, std::optional<UserId> owner,
                                          SeverityLevel severity) {
    if (id.empty()) {
        throw Error(ErrorCode::MalformedPayload, "device id must be non-empty");
    }
    if (devices.count(id) != 0) {
        throw Error(ErrorCode::DuplicateDevice, "device already registered: " + id);
    }
    if (owner) {
        users.require_registered(*owner);
    }
    DeviceState state;
    state.id = id;
    state.owner = std::move(owner);
    state.severity = severity;
    return devices.emplace(id, std::move(state)).first->second;
}

DeviceState& EngineState::device(const DeviceId& id) {
    auto it = devices.find(id);
    if (it == devices.end()) {
        throw Error(ErrorCode::UnknownDevice, "unknown device: " + id);
    }
    return it->second;
}

const DeviceState& EngineState::device(const DeviceId& id) const {
    auto it = devices.find(id);
    if (it == devices.end()) {
        throw Error(ErrorCode::UnknownDevice, "unknown device: " + id);
    }
    return it->second;
}

bool EngineState::has_device(const DeviceId& id) const {
    return devices.count(id) != 0;
}

} // namespace tms
