#pragma once

#include "tms/core_model.hpp"

#include <map>

namespace tms {

/// Likelihood-of-compromise category, most likely first.
enum class ProbabilityBucket { HighlyProbable, Probable, Medium, Remote, Improbable };

const char* to_string(ProbabilityBucket bucket);

/// Buckets a compromise probability using params.prob_thresholds;
/// boundary values belong to the bucket above. Throws OutOfRange.
ProbabilityBucket bucket_probability(double prc, const EngineParams& params);

/// The 5x5 risk assessment matrix: perceived severity crossed with
/// compromise likelihood.
RiskLabel risk_matrix_lookup(SeverityLevel severity, ProbabilityBucket bucket);

/// Numeric stratum for a risk label: Negligible 0, Low 0.25, Medium 0.5,
/// Serious 0.75, Catastrophic 1.
double sra_numeric(RiskLabel label);

/// Singular risk assessment of one device: matrix lookup on its severity
/// and bucketed prc, mapped to the numeric stratum.
double device_sra(const DeviceState& state, const EngineParams& params);

/// Cumulative effect on neighbouring infrastructure: sum of the singular
/// risk of every out-neighbor. Unbounded above.
double compute_ccen(const DeviceId& device, const TopologyGraph& topology,
                    const std::map<DeviceId, DeviceState>& devices,
                    const EngineParams& params);

/// Amortized neighbour effect: prc * (1 - exp(-ccen)), always <= prc.
double compute_accen(double prc, double ccen);

/// Associated-risk trust: 1 - max(own risk, amortized neighbour effect).
double compute_abt(double sra_n, double accen);

/// Optional estimator for the compromise probability when no ingested
/// value is available: 1 - product over remotely exploitable
/// vulnerabilities of (1 - exploitability/10).
double estimate_prc(const std::map<std::string, Vulnerability>& vulns);

} // namespace tms
