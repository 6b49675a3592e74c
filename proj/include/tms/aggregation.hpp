#pragma once

#include "tms/core_model.hpp"

#include <cstdint>

namespace tms {

/// A full trust evaluation of one device by one evaluating user, with the
/// partial-score breakdown behind each dimension.
struct TrustReport {
    DeviceId device;
    UserId evaluator_owner;
    std::int64_t at = 0; // engine clock at evaluation time, ms

    double sbt = 1.0;
    double bbt = 1.0;
    double abt = 1.0;
    double lta = 1.0;
    double ut = 1.0;
    double ts = 1.0;

    // breakdown
    double sbt_i = 1.0;
    double sbt_v = 1.0;
    double bbt_c = 1.0;
    double bbt_n = 1.0;
    double bbt_m = 1.0;
    double sra_n = 0.0;
    double accen = 0.0;
};

/// Simple additive weighting of the three trust dimensions.
double compute_lta(double sbt, double bbt, double abt, const EngineParams& params);

/// Trust the evaluator places in a device owner: 1 for themselves, the
/// asserted level when one exists, ut_known for a known identity without
/// an assertion, ut_unknown otherwise.
double user_trust(const UserId& evaluator, const std::optional<UserId>& owner,
                  const UserTrustGraph& graph, const EngineParams& params);

/// Assembles the complete report for one device as seen by the evaluator,
/// from a snapshot of engine state. Deterministic.
TrustReport compute_ts(const DeviceId& device, const UserId& evaluator,
                       const EngineState& state);

} // namespace tms
