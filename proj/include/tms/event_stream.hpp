#pragma once

#include "tms/event_engine.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tms {

/// Parses one event object ({"ts", "seq", "kind", ...payload fields}).
/// Throws MalformedPayload (or OutOfRange and friends) with field context.
SecurityEvent event_from_json(const nlohmann::json& doc);

nlohmann::json event_to_json(const SecurityEvent& event);

/// Parses one JSONL line; errors are prefixed with the line number.
SecurityEvent parse_event_line(std::string_view line, std::size_t line_number);

/// Loads a whole stream; blank lines are skipped. Does not sort and does
/// not check ordering — the engine rejects reordered events on apply.
std::vector<SecurityEvent> load_events(const std::filesystem::path& path);

void save_events(const std::filesystem::path& path, std::span<const SecurityEvent> events);

/// Stable sort by (ts, seq) for producers that cannot guarantee order.
void sort_events(std::vector<SecurityEvent>& events);

} // namespace tms
