#pragma once

#include "tms/core_model.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace tms {

/// Builds the initial engine state from a scenario document:
/// {"params": {...}, "users": [...], "devices": [...], "topology": [...],
///  "user_trust": [...]}. Every section except "users"/"devices" is
/// optional; params fall back to defaults field by field.
/// Throws ScenarioError (or the underlying registry error) with context.
EngineState scenario_from_json(const nlohmann::json& doc);

EngineState load_scenario(const std::filesystem::path& path);

} // namespace tms
