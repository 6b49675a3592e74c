#include "tms/risk_trust.hpp"

#include <cmath>

namespace tms {

namespace {

// Rows: severity (Catastrophic..Negligible). Columns: probability bucket
// (HighlyProbable..Improbable).
constexpr RiskLabel kRiskMatrix[5][5] = {
    {RiskLabel::Catastrophic, RiskLabel::Catastrophic, RiskLabel::Catastrophic, RiskLabel::Serious, RiskLabel::Medium},
    {RiskLabel::Catastrophic, RiskLabel::Catastrophic, RiskLabel::Serious, RiskLabel::Medium, RiskLabel::Low},
    {RiskLabel::Catastrophic, RiskLabel::Serious, RiskLabel::Medium, RiskLabel::Low, RiskLabel::Negligible},
    {RiskLabel::Serious, RiskLabel::Medium, RiskLabel::Low, RiskLabel::Negligible, RiskLabel::Negligible},
    {RiskLabel::Medium, RiskLabel::Low, RiskLabel::Negligible, RiskLabel::Negligible, RiskLabel::Negligible},
};

} // namespace

const char* to_string(ProbabilityBucket bucket) {
    switch (bucket) {
        case ProbabilityBucket::HighlyProbable: return "HighlyProbable";
        case ProbabilityBucket::Probable: return "Probable";
        case ProbabilityBucket::Medium: return "Medium";
        case ProbabilityBucket::Remote: return "Remote";
        case ProbabilityBucket::Improbable: return "Improbable";
    }
    return "?";
}

ProbabilityBucket bucket_probability(double prc, const EngineParams& params) {
    if (!(prc >= 0.0 && prc <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "compromise probability must lie in [0,1]");
    }
    const auto& t = params.prob_thresholds;
    if (prc < t[0]) return ProbabilityBucket::Improbable;
    if (prc < t[1]) return ProbabilityBucket::Remote;
    if (prc < t[2]) return ProbabilityBucket::Medium;
    if (prc < t[3]) return ProbabilityBucket::Probable;
    return ProbabilityBucket::HighlyProbable;
}

RiskLabel risk_matrix_lookup(SeverityLevel severity, ProbabilityBucket bucket) {
    return kRiskMatrix[static_cast<int>(severity)][static_cast<int>(bucket)];
}

double sra_numeric(RiskLabel label) {
    switch (label) {
        case RiskLabel::Negligible: return 0.0;
        case RiskLabel::Low: return 0.25;
        case RiskLabel::Medium: return 0.5;
        case RiskLabel::Serious: return 0.75;
        case RiskLabel::Catastrophic: return 1.0;
    }
    return 0.0;
}

double device_sra(const DeviceState& state, const EngineParams& params) {
    return sra_numeric(risk_matrix_lookup(state.severity, bucket_probability(state.prc, params)));
}

double compute_ccen(const DeviceId& device, const TopologyGraph& topology,
                    const std::map<DeviceId, DeviceState>& devices,
                    const EngineParams& params) {
    if (devices.count(device) == 0) {
        throw Error(ErrorCode::UnknownDevice, "unknown device: " + device);
    }
    double sum = 0.0;
    for (const DeviceId& neighbor : topology.neighbors(device)) {
        auto it = devices.find(neighbor);
        if (it == devices.end()) {
            throw Error(ErrorCode::UnknownDevice, "unknown neighbor device: " + neighbor);
        }
        sum += device_sra(it->second, params);
    }
    return sum;
}

double compute_accen(double prc, double ccen) {
    return prc * (1.0 - std::exp(-ccen));
}

double compute_abt(double sra_n, double accen) {
    return 1.0 - std::max(sra_n, accen);
}

double estimate_prc(const std::map<std::string, Vulnerability>& vulns) {
    double survival = 1.0;
    for (const auto& [cve, v] : vulns) {
        if (remotely_exploitable(v.attack_vector)) {
            survival *= 1.0 - v.exploitability / 10.0;
        }
    }
    return 1.0 - survival;
}

} // namespace tms
