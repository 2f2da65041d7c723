#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scanboard/scanner.hpp"

namespace scanboard::engine {

struct EngineConfig {
  ScanConfig scan;
  /// 0 = opaque, 1 = fully transparent.
  double transparency = 0.0;
  bool zoom_enabled = false;
  bool voice_enabled = false;
  double keyboard_scale = 1.0;
  /// Path to a layout document, or "builtin".
  std::string layout_path = "builtin";

  /// Throws ConfigError on any out-of-range field.
  void validate() const;

  bool operator==(const EngineConfig&) const = default;
};

nlohmann::ordered_json config_to_json(const EngineConfig& config);
/// Missing fields keep their defaults; wrong types or unknown enum values
/// throw ConfigError. The result is not range-checked.
EngineConfig config_from_json(const nlohmann::json& j);

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes atomically (temporary file + rename). Throws ProfileError.
void save_profile(const EngineConfig& config, const std::filesystem::path& path);
/// Throws ProfileError for I/O failures or a malformed/invalid document.
EngineConfig load_profile(const std::filesystem::path& path);

/// $SCANBOARD_PROFILE, else $HOME/.scanboard_profile.json, else
/// ./scanboard_profile.json.
std::filesystem::path default_profile_path();

}  // namespace scanboard::engine
