#include "tms/scenario.hpp"

#include <fstream>
#include <sstream>

namespace tms {

using nlohmann::json;

namespace {

EngineParams scenario_params(const json& doc) {
    EngineParams p;
    if (!doc.contains("params")) {
        return p;
    }
    const json& src = doc["params"];
    if (!src.is_object()) {
        throw Error(ErrorCode::ScenarioError, "\"params\" must be an object");
    }
    p.w_s = src.value("w_s", p.w_s);
    p.w_b = src.value("w_b", p.w_b);
    p.w_a = src.value("w_a", p.w_a);
    p.tsrr_compliance = src.value("tsrr_compliance", p.tsrr_compliance);
    p.tsrr_nominality = src.value("tsrr_nominality", p.tsrr_nominality);
    p.ut_known = src.value("ut_known", p.ut_known);
    p.ut_unknown = src.value("ut_unknown", p.ut_unknown);
    if (src.contains("prob_thresholds")) {
        const json& t = src["prob_thresholds"];
        if (!t.is_array() || t.size() != 4) {
            throw Error(ErrorCode::ScenarioError, "prob_thresholds must hold four values");
        }
        for (std::size_t i = 0; i < 4; ++i) {
            p.prob_thresholds[i] = t[i].get<double>();
        }
    }
    if (src.contains("sbt_v_convention")) {
        p.sbt_v_convention = sbt_v_convention_from_string(src["sbt_v_convention"].get<std::string>());
    }
    p.auto_prc = src.value("auto_prc", false);
    return p;
}

} // namespace

EngineState scenario_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorCode::ScenarioError, "scenario must be a JSON object");
    }
    try {
        EngineState state;
        state.params = scenario_params(doc);
        state.params.validate();

        for (const auto& u : doc.value("users", json::array())) {
            state.users.register_user(u.at("id").get<std::string>(), u.value("known", true));
        }
        for (const auto& d : doc.value("devices", json::array())) {
            std::optional<UserId> owner;
            if (d.contains("owner") && !d["owner"].is_null()) {
                const std::string raw = d["owner"].get<std::string>();
                if (raw != "Unknown") {
                    owner = raw;
                }
            }
            DeviceState& device = state.register_device(
                d.at("id").get<std::string>(), owner,
                severity_from_string(d.at("severity").get<std::string>()));
            const double prc = d.value("prc", 0.0);
            if (!(prc >= 0.0 && prc <= 1.0)) {
                throw Error(ErrorCode::ScenarioError,
                            "device " + device.id + ": prc must lie in [0,1]");
            }
            device.prc = prc;
        }
        for (const auto& link : doc.value("topology", json::array())) {
            if (!link.is_array() || link.size() != 2) {
                throw Error(ErrorCode::ScenarioError, "topology entries must be [from, to] pairs");
            }
            const auto from = link[0].get<std::string>();
            const auto to = link[1].get<std::string>();
            if (!state.has_device(from) || !state.has_device(to)) {
                throw Error(ErrorCode::ScenarioError,
                            "topology references unregistered device: " + from + " -> " + to);
            }
            state.topology.add_link(from, to);
        }
        for (const auto& t : doc.value("user_trust", json::array())) {
            state.users.assert_trust(t.at("from").get<std::string>(),
                                     t.at("to").get<std::string>(), t.at("level").get<double>());
        }
        return state;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ScenarioError, std::string("malformed scenario: ") + e.what());
    }
}

EngineState load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ScenarioError, "cannot open scenario file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ScenarioError,
                    "scenario " + path.string() + " is not valid JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

} // namespace tms
