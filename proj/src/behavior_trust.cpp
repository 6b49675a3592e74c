#include "tms/behavior_trust.hpp"

#include <algorithm>

namespace tms {

void on_noncompliant_flow(DeviceState& state) {
    state.bbt_c = 0.0;
}

double deviation_degree(const MetricObservation& obs) {
    if (obs.detected_max < 0.0) {
        throw Error(ErrorCode::OutOfRange, "detected_max must be non-negative");
    }
    if (!(obs.nominal_high_end > 0.0)) {
        throw Error(ErrorCode::OutOfRange, "nominal_high_end must be positive");
    }
    if (obs.detected_max == 0.0) {
        return 0.0;
    }
    return std::max((obs.detected_max - obs.nominal_high_end) / obs.detected_max, 0.0);
}

void on_metric_observation(DeviceState& state, const MetricObservation& obs) {
    state.bbt_n = std::max(state.bbt_n - deviation_degree(obs), 0.0);
}

void on_attack_launched(DeviceState& state) {
    state.bbt_m = 0.0;
}

void on_health_restored(DeviceState& state) {
    state.sbt_i = 1.0;
    state.bbt_m = 1.0;
}

void restore_tick(DeviceState& state, double elapsed_seconds, const EngineParams& params) {
    if (elapsed_seconds < 0.0) {
        throw Error(ErrorCode::NegativeElapsed, "restoration tick with negative elapsed time");
    }
    state.bbt_c = std::min(state.bbt_c + params.tsrr_compliance * elapsed_seconds, 1.0);
    state.bbt_n = std::min(state.bbt_n + params.tsrr_nominality * elapsed_seconds, 1.0);
}

double compute_bbt(const DeviceState& state) {
    return state.bbt_c * state.bbt_n * state.bbt_m;
}

} // namespace tms
