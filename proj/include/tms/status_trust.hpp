#pragma once

#include "tms/core_model.hpp"

#include <map>
#include <string>

namespace tms {

/// Overall vulnerability burden: the sum of impact/10 over every
/// remotely exploitable vulnerability in the set. Order-independent.
double compute_ovim(const std::map<std::string, Vulnerability>& vulns);

/// Maps the burden into a [0,1] score. Decreasing convention (default)
/// returns exp(-ovim) so a clean device scores 1; PaperLiteral returns
/// 1 - exp(-ovim).
double compute_sbt_v(double ovim, const EngineParams& params);

/// Status-based trust: integrity flag times the vulnerability score.
double compute_sbt(const DeviceState& state, const EngineParams& params);

/// Marks the device as compromised: integrity drops to zero until health
/// is explicitly restored.
void on_compromise_detected(DeviceState& state);

} // namespace tms
