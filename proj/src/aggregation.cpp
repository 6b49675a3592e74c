#include "tms/aggregation.hpp"

#include "tms/behavior_trust.hpp"
#include "tms/risk_trust.hpp"
#include "tms/status_trust.hpp"

namespace tms {

double compute_lta(double sbt, double bbt, double abt, const EngineParams& params) {
    return params.w_s * sbt + params.w_b * bbt + params.w_a * abt;
}

double user_trust(const UserId& evaluator, const std::optional<UserId>& owner,
                  const UserTrustGraph& graph, const EngineParams& params) {
    graph.require_registered(evaluator);
    if (!owner) {
        return params.ut_unknown;
    }
    graph.require_registered(*owner);
    if (evaluator == *owner) {
        return 1.0;
    }
    if (auto asserted = graph.trust(evaluator, *owner)) {
        return *asserted;
    }
    return graph.is_known(*owner) ? params.ut_known : params.ut_unknown;
}

TrustReport compute_ts(const DeviceId& device, const UserId& evaluator,
                       const EngineState& state) {
    state.users.require_registered(evaluator);
    const DeviceState& d = state.device(device);

    TrustReport r;
    r.device = device;
    r.evaluator_owner = evaluator;
    r.at = state.clock_ms;

    r.sbt_i = d.sbt_i;
    r.sbt_v = compute_sbt_v(compute_ovim(d.vulnerabilities), state.params);
    r.sbt = compute_sbt(d, state.params);

    r.bbt_c = d.bbt_c;
    r.bbt_n = d.bbt_n;
    r.bbt_m = d.bbt_m;
    r.bbt = compute_bbt(d);

    r.sra_n = device_sra(d, state.params);
    const double ccen = compute_ccen(device, state.topology, state.devices, state.params);
    r.accen = compute_accen(d.prc, ccen);
    r.abt = compute_abt(r.sra_n, r.accen);

    r.lta = compute_lta(r.sbt, r.bbt, r.abt, state.params);
    r.ut = user_trust(evaluator, d.owner, state.users, state.params);
    r.ts = r.lta * r.ut;
    return r;
}

} // namespace tms
