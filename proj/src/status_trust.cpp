#include "tms/status_trust.hpp"

#include <cmath>

namespace tms {

double compute_ovim(const std::map<std::string, Vulnerability>& vulns) {
    double sum = 0.0;
    for (const auto& [cve, v] : vulns) {
        if (remotely_exploitable(v.attack_vector)) {
            sum += v.impact / 10.0;
        }
    }
    return sum;
}

double compute_sbt_v(double ovim, const EngineParams& params) {
    const double decayed = std::exp(-ovim);
    return params.sbt_v_convention == SbtVConvention::Decreasing ? decayed : 1.0 - decayed;
}

double compute_sbt(const DeviceState& state, const EngineParams& params) {
    return state.sbt_i * compute_sbt_v(compute_ovim(state.vulnerabilities), params);
}

void on_compromise_detected(DeviceState& state) {
    state.sbt_i = 0.0;
}

} // namespace tms
