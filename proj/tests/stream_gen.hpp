#pragma once

// Deterministic random scenario/event-stream generators shared by the unit
// and acceptance suites. Produces only valid events so folds never reject.

#include "tms/event_engine.hpp"

#include <random>
#include <string>
#include <vector>

namespace tmstest {

inline tms::EngineState make_scenario(std::size_t n_devices, std::size_t n_users,
                                      std::mt19937_64& rng) {
    tms::EngineState state;
    std::bernoulli_distribution known(0.7);
    for (std::size_t i = 0; i < n_users; ++i) {
        state.users.register_user("u" + std::to_string(i), known(rng));
    }
    std::uniform_int_distribution<std::size_t> user_pick(0, n_users - 1);
    std::uniform_int_distribution<int> severity_pick(0, 4);
    std::bernoulli_distribution has_owner(0.85);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n_devices; ++i) {
        std::optional<tms::UserId> owner;
        if (has_owner(rng)) owner = "u" + std::to_string(user_pick(rng));
        auto& d = state.register_device("d" + std::to_string(i), owner,
                                        static_cast<tms::SeverityLevel>(severity_pick(rng)));
        d.prc = unit(rng);
    }
    return state;
}

/// A stream of valid events over the given device/user id spaces, with
/// non-decreasing timestamps starting at start_ts.
inline std::vector<tms::SecurityEvent> make_stream(std::size_t count, std::size_t n_devices,
                                                   std::size_t n_users, std::mt19937_64& rng,
                                                   std::int64_t start_ts = 0) {
    std::vector<tms::SecurityEvent> events;
    events.reserve(count);
    std::uniform_int_distribution<std::int64_t> step(0, 5000);
    std::uniform_int_distribution<int> kind_pick(0, 11);
    std::uniform_int_distribution<std::size_t> device_pick(0, n_devices - 1);
    std::uniform_int_distribution<std::size_t> user_pick(0, n_users - 1);
    std::uniform_int_distribution<int> severity_pick(0, 4);
    std::uniform_int_distribution<int> vector_pick(0, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> cvss(0.0, 10.0);
    std::uniform_real_distribution<double> metric(0.0, 500.0);
    std::uniform_int_distribution<int> cve_pick(0, 9);

    std::int64_t ts = start_ts;
    auto device = [&] { return "d" + std::to_string(device_pick(rng)); };
    for (std::size_t i = 0; i < count; ++i) {
        ts += step(rng);
        tms::SecurityEvent event;
        event.ts = ts;
        event.seq = static_cast<std::int64_t>(i);
        switch (kind_pick(rng)) {
            case 0: {
                tms::Vulnerability v;
                v.cve_id = "CVE-GEN-" + std::to_string(cve_pick(rng));
                v.attack_vector = static_cast<tms::AttackVector>(vector_pick(rng));
                v.impact = cvss(rng);
                v.exploitability = cvss(rng);
                event.payload = tms::ev::VulnerabilityDetected{device(), v};
                break;
            }
            case 1:
                event.payload = tms::ev::VulnerabilityMitigated{
                    device(), "CVE-GEN-" + std::to_string(cve_pick(rng))};
                break;
            case 2:
                event.payload = tms::ev::CompromiseDetected{device()};
                break;
            case 3:
                event.payload = tms::ev::HealthRestored{device()};
                break;
            case 4:
                event.payload = tms::ev::NonCompliantFlow{device()};
                break;
            case 5: {
                tms::MetricObservation obs;
                obs.device = device();
                obs.metric_name = "net_bytes_out";
                obs.detected_max = metric(rng);
                obs.nominal_high_end = metric(rng) + 1.0;
                event.payload = tms::ev::MetricObserved{obs};
                break;
            }
            case 6:
                event.payload = tms::ev::AttackLaunched{device()};
                break;
            case 7: {
                auto from = device();
                auto to = device();
                if (from == to) {
                    event.payload = tms::ev::NonCompliantFlow{from};
                } else {
                    event.payload = tms::ev::TopologyLinkAdded{from, to};
                }
                break;
            }
            case 8: {
                auto from = device();
                auto to = device();
                if (from == to) {
                    event.payload = tms::ev::NonCompliantFlow{from};
                } else {
                    event.payload = tms::ev::TopologyLinkRemoved{from, to};
                }
                break;
            }
            case 9:
                event.payload = tms::ev::SeveritySet{
                    device(), static_cast<tms::SeverityLevel>(severity_pick(rng))};
                break;
            case 10:
                event.payload = tms::ev::PrcSet{device(), unit(rng)};
                break;
            case 11: {
                auto from = "u" + std::to_string(user_pick(rng));
                auto to = "u" + std::to_string(user_pick(rng));
                if (from == to) {
                    event.payload = tms::ev::NonCompliantFlow{device()};
                } else {
                    event.payload = tms::ev::UserTrustAsserted{from, to, unit(rng)};
                }
                break;
            }
        }
        events.push_back(std::move(event));
    }
    return events;
}

} // namespace tmstest
