#pragma once

#include "tms/core_model.hpp"

#include <string>

namespace tms {

/// One resource-usage measurement against its nominal baseline.
struct MetricObservation {
    DeviceId device;
    std::string metric_name;
    double detected_max = 0.0;     // >= 0
    double nominal_high_end = 1.0; // > 0
};

/// Non-compliant traffic zeroes the compliance score, even mid-restoration.
void on_noncompliant_flow(DeviceState& state);

/// Relative exceedance of the nominal high end, clamped at zero.
/// Returns 0 when detected_max is 0.
double deviation_degree(const MetricObservation& obs);

/// Deducts the deviation degree from the nominality score, floored at 0.
void on_metric_observation(DeviceState& state, const MetricObservation& obs);

/// Launching an attack zeroes the malicious-activity score; restoration
/// ticks never raise it again.
void on_attack_launched(DeviceState& state);

/// Explicit health restoration: integrity and the malicious-activity score
/// both return to 1. Compliance and nominality keep restoring on their own.
void on_health_restored(DeviceState& state);

/// Linear time-driven recovery of compliance and nominality, capped at 1.
/// The malicious-activity score is never touched. Throws NegativeElapsed.
void restore_tick(DeviceState& state, double elapsed_seconds, const EngineParams& params);

/// Behaviour-based trust: product of compliance, nominality and
/// malicious-activity scores.
double compute_bbt(const DeviceState& state);

} // namespace tms
