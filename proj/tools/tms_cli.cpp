// Operator CLI: replay event streams over a scenario, query trust at a
// point in time, validate inputs, and sort unordered streams.

#include "tms/event_stream.hpp"
#include "tms/report_io.hpp"
#include "tms/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitReplay = 3;
constexpr int kExitIo = 4;

bool debug_enabled() {
    static const bool enabled = [] {
        const char* level = std::getenv("TMS_LOG");
        return level != nullptr &&
               (std::string_view(level) == "debug" || std::string_view(level) == "1");
    }();
    return enabled;
}

void debug(const std::string& message) {
    if (debug_enabled()) {
        std::cerr << "tms: " << message << '\n';
    }
}

int fail(int exit_code, const tms::Error& e) {
    std::cerr << "tms: error [" << tms::error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code;
}

struct LoadedInputs {
    tms::Engine engine;
    std::vector<tms::SecurityEvent> events;
};

LoadedInputs load_inputs(const std::string& scenario_path, const std::string& events_path) {
    LoadedInputs inputs{tms::Engine(tms::load_scenario(scenario_path)), {}};
    debug("loaded scenario " + scenario_path);
    inputs.events = tms::load_events(events_path);
    debug("loaded " + std::to_string(inputs.events.size()) + " events from " + events_path);
    return inputs;
}

tms::Error with_event_context(const tms::Error& e, std::size_t index,
                              const tms::SecurityEvent& event) {
    std::ostringstream msg;
    msg << "event #" << index << " (ts=" << event.ts << ", seq=" << event.seq
        << ", kind=" << tms::to_string(event.kind()) << "): " << e.what();
    return tms::Error(e.code(), msg.str());
}

void write_reports(std::ostream& out, const std::vector<tms::TrustReport>& reports, bool csv) {
    for (const auto& report : reports) {
        if (csv) {
            tms::write_csv_row(out, report);
        } else {
            tms::write_jsonl_row(out, report);
        }
    }
}

int cmd_run(const std::string& scenario_path, const std::string& events_path,
            const std::string& evaluator, const std::string& out_path, const std::string& format,
            std::optional<std::int64_t> sample_every) {
    std::optional<LoadedInputs> inputs;
    try {
        inputs = load_inputs(scenario_path, events_path);
        // The evaluator is the TMS owner: a scenario-level entity, present
        // before any event arrives.
        inputs->engine.state().users.require_registered(evaluator);
    } catch (const tms::Error& e) {
        return fail(kExitInput, e);
    }

    std::ofstream out(out_path);
    if (!out) {
        return fail(kExitIo, tms::Error(tms::ErrorCode::IoError,
                                        "cannot open output file: " + out_path));
    }
    const bool csv = format == "csv";
    if (csv) {
        tms::write_csv_header(out);
    }

    tms::Engine& engine = inputs->engine;
    const auto& events = inputs->events;
    try {
        if (sample_every) {
            // Time grid anchored at the first event: a row set at t reflects
            // every event with ts <= t.
            std::int64_t next = events.empty() ? 0 : events.front().ts;
            for (std::size_t i = 0; i < events.size(); ++i) {
                while (next < events[i].ts) {
                    write_reports(out, engine.reports_at(evaluator, next), csv);
                    next += *sample_every;
                }
                try {
                    engine.apply(events[i]);
                } catch (const tms::Error& e) {
                    throw with_event_context(e, i, events[i]);
                }
            }
            const std::int64_t end = events.empty() ? 0 : events.back().ts;
            while (next <= end) {
                write_reports(out, engine.reports_at(evaluator, next), csv);
                next += *sample_every;
            }
        } else {
            // One row set per applied event.
            tms::replay(engine, events,
                        [&](std::size_t index, const tms::SecurityEvent& event,
                            const tms::Engine& e) {
                            debug("applied event #" + std::to_string(index) +
                                  " kind=" + tms::to_string(event.kind()));
                            write_reports(out, e.reports_at(evaluator, event.ts), csv);
                        });
            if (events.empty()) {
                write_reports(out, engine.reports_at(evaluator, 0), csv);
            }
        }
    } catch (const tms::Error& e) {
        return fail(kExitReplay, e);
    }

    out.flush();
    if (!out) {
        return fail(kExitIo,
                    tms::Error(tms::ErrorCode::IoError, "failed writing output to " + out_path));
    }
    return 0;
}

int cmd_query(const std::string& scenario_path, const std::string& events_path,
              const std::string& device, const std::string& evaluator, std::int64_t at) {
    std::optional<LoadedInputs> inputs;
    try {
        if (at < 0) {
            throw tms::Error(tms::ErrorCode::OutOfRange, "--at must be non-negative");
        }
        inputs = load_inputs(scenario_path, events_path);
    } catch (const tms::Error& e) {
        return fail(kExitInput, e);
    }

    tms::Engine& engine = inputs->engine;
    try {
        std::size_t applied = 0;
        for (const auto& event : inputs->events) {
            if (event.ts > at) break;
            try {
                engine.apply(event);
            } catch (const tms::Error& e) {
                throw with_event_context(e, applied, event);
            }
            ++applied;
        }
        debug("applied " + std::to_string(applied) + " events up to ts=" + std::to_string(at));
    } catch (const tms::Error& e) {
        return fail(kExitReplay, e);
    }

    try {
        const tms::TrustReport report = engine.report_at(device, evaluator, at);
        std::cout << tms::report_to_json(report).dump(2) << '\n';
    } catch (const tms::Error& e) {
        return fail(kExitInput, e); // unknown device/user at query time
    }
    return 0;
}

int cmd_validate(const std::string& scenario_path, const std::string& events_path) {
    std::vector<std::string> diagnostics;

    std::optional<tms::Engine> engine;
    try {
        engine.emplace(tms::load_scenario(scenario_path));
    } catch (const tms::Error& e) {
        diagnostics.push_back(std::string("scenario: ") + e.what());
    }

    std::ifstream in(events_path);
    if (!in) {
        diagnostics.push_back("events: cannot open file: " + events_path);
    } else {
        std::string line;
        std::size_t line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            tms::SecurityEvent event;
            try {
                event = tms::parse_event_line(line, line_number);
            } catch (const tms::Error& e) {
                diagnostics.push_back(std::string("events: ") + e.what());
                continue;
            }
            if (!engine) continue;
            try {
                engine->apply(event);
            } catch (const tms::Error& e) {
                // Skip the rejected event and keep checking the remainder.
                diagnostics.push_back("events: line " + std::to_string(line_number) + ": " +
                                      e.what());
            }
        }
    }

    for (const auto& d : diagnostics) {
        std::cout << d << '\n';
    }
    std::cout << diagnostics.size() << " errors\n";
    return diagnostics.empty() ? 0 : kExitInput;
}

int cmd_sort_events(const std::string& events_path, const std::string& out_path) {
    std::vector<tms::SecurityEvent> events;
    try {
        events = tms::load_events(events_path);
    } catch (const tms::Error& e) {
        return fail(kExitInput, e);
    }
    tms::sort_events(events);
    try {
        tms::save_events(out_path, events);
    } catch (const tms::Error& e) {
        return fail(kExitIo, e);
    }
    debug("sorted " + std::to_string(events.size()) + " events into " + out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trust scoring engine over timestamped security-event streams"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string events_path;
    std::string evaluator;
    std::string device;
    std::string out_path;
    std::string format = "csv";
    std::int64_t at = 0;
    std::optional<std::int64_t> sample_every;

    auto* run = app.add_subcommand("run", "Replay events and export a trust time series");
    run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--events", events_path, "Event stream (JSON Lines)")->required();
    run->add_option("--evaluator", evaluator, "Evaluating user id")->required();
    run->add_option("--out", out_path, "Output file")->required();
    run->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    run->add_option("--sample-every", sample_every,
                    "Sampling interval in ms (default: one sample per event)")
        ->check(CLI::PositiveNumber);

    auto* query = app.add_subcommand("query", "Trust report for one device at a time point");
    query->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    query->add_option("--events", events_path, "Event stream (JSON Lines)")->required();
    query->add_option("--device", device, "Device id")->required();
    query->add_option("--evaluator", evaluator, "Evaluating user id")->required();
    query->add_option("--at", at, "Timestamp (ms) to evaluate at")->required();

    auto* validate = app.add_subcommand("validate", "Check scenario and events for errors");
    validate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    validate->add_option("--events", events_path, "Event stream (JSON Lines)")->required();

    auto* sort = app.add_subcommand("sort-events", "Sort an event stream by (ts, seq)");
    sort->add_option("--events", events_path, "Event stream (JSON Lines)")->required();
    sort->add_option("--out", out_path, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return cmd_run(scenario_path, events_path, evaluator, out_path, format, sample_every);
    }
    if (query->parsed()) {
        return cmd_query(scenario_path, events_path, device, evaluator, at);
    }
    if (validate->parsed()) {
        return cmd_validate(scenario_path, events_path);
    }
    if (sort->parsed()) {
        return cmd_sort_events(events_path, out_path);
    }
    return 0;
}
