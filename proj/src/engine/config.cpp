#include "scanboard/engine/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scanboard::engine {

using nlohmann::json;
using nlohmann::ordered_json;

void EngineConfig::validate() const {
  scan.validate();
  if (!(transparency >= 0.0 && transparency <= 1.0)) {
    throw ConfigError("transparency must be within [0, 1]");
  }
  if (!(keyboard_scale >= 0.5 && keyboard_scale <= 3.0)) {
    throw ConfigError("keyboard_scale must be within [0.5, 3]");
  }
  if (layout_path.empty()) throw ConfigError("layout_path must not be empty");
}

ordered_json config_to_json(const EngineConfig& config) {
  ordered_json scan;
  scan["period_ms"] = config.scan.period_ms;
  scan["repeat_cycles"] = config.scan.repeat_cycles;
  scan["sound_on"] = config.scan.sound_on;
  const auto& c = config.scan.highlight_color;
  scan["highlight_color"] = {c.r, c.g, c.b};
  scan["post_select"] = std::string(to_string(config.scan.post_select));

  ordered_json j;
  j["scan"] = std::move(scan);
  j["transparency"] = config.transparency;
  j["zoom_enabled"] = config.zoom_enabled;
  j["voice_enabled"] = config.voice_enabled;
  j["keyboard_scale"] = config.keyboard_scale;
  j["layout_path"] = config.layout_path;
  return j;
}

namespace {

template <typename T>
void read_field(const json& obj, const char* name, T& out) {
  auto it = obj.find(name);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + name + "' has the wrong type");
  }
}

// JSON integers for int fields; reject fractional or out-of-range numbers.
void read_int(const json& obj, const char* name, int& out) {
  auto it = obj.find(name);
  if (it == obj.end()) return;
  if (!it->is_number_integer()) {
    throw ConfigError(std::string("config field '") + name + "' must be an integer");
  }
  auto v = it->get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) {
    throw ConfigError(std::string("config field '") + name + "' is out of range");
  }
  out = static_cast<int>(v);
}

}  // namespace

EngineConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  EngineConfig config;
  if (auto it = j.find("scan"); it != j.end()) {
    const json& s = *it;
    if (!s.is_object()) throw ConfigError("config field 'scan' must be an object");
    read_int(s, "period_ms", config.scan.period_ms);
    read_int(s, "repeat_cycles", config.scan.repeat_cycles);
    read_field(s, "sound_on", config.scan.sound_on);
    if (auto c = s.find("highlight_color"); c != s.end()) {
      if (!c->is_array() || c->size() != 3) throw ConfigError("highlight_color must be [r, g, b]");
      std::uint8_t rgb[3];
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& v = (*c)[i];
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 255) {
          throw ConfigError("highlight_color components must be integers in [0, 255]");
        }
        rgb[i] = static_cast<std::uint8_t>(v.get<int>());
      }
      config.scan.highlight_color = Rgb{rgb[0], rgb[1], rgb[2]};
    }
    if (auto p = s.find("post_select"); p != s.end()) {
      auto post = p->is_string() ? post_select_from_string(p->get<std::string>()) : std::nullopt;
      if (!post) throw ConfigError("post_select must be reset_to_top or stay_in_row");
      config.scan.post_select = *post;
    }
  }
  read_field(j, "transparency", config.transparency);
  read_field(j, "zoom_enabled", config.zoom_enabled);
  read_field(j, "voice_enabled", config.voice_enabled);
  read_field(j, "keyboard_scale", config.keyboard_scale);
  read_field(j, "layout_path", config.layout_path);
  return config;
}

void save_profile(const EngineConfig& config, const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ProfileError("cannot write profile " + tmp.string());
    out << config_to_json(config).dump(2) << "\n";
    if (!out.flush()) throw ProfileError("cannot write profile " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ProfileError("cannot replace profile " + path.string());
  }
}

EngineConfig load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot read profile " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    EngineConfig config = config_from_json(json::parse(buf.str()));
    config.validate();
    return config;
  } catch (const json::exception& e) {
    throw ProfileError("malformed profile " + path.string() + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ProfileError("invalid profile " + path.string() + ": " + e.what());
  }
}

std::filesystem::path default_profile_path() {
  if (const char* env = std::getenv("SCANBOARD_PROFILE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".scanboard_profile.json";
  }
  return "scanboard_profile.json";
}

}  // namespace scanboard::engine
