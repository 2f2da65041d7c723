#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scanboard/engine/config.hpp"
#include "scanboard/logo/interpreter.hpp"
#include "scanboard/scanner.hpp"

namespace scanboard::engine {

// Client -> engine.
namespace client {
struct SwitchPress { bool operator==(const SwitchPress&) const = default; };
struct PointerHover { std::string key_id; bool operator==(const PointerHover&) const = default; };
struct PointerSelect { std::string key_id; bool operator==(const PointerSelect&) const = default; };
struct ClockTick { bool operator==(const ClockTick&) const = default; };
struct ConfigUpdate { EngineConfig config; bool operator==(const ConfigUpdate&) const = default; };
struct RunBuffer { bool operator==(const RunBuffer&) const = default; };
struct ClearBuffer { bool operator==(const ClearBuffer&) const = default; };
struct LoadProgram { std::string text; bool operator==(const LoadProgram&) const = default; };
}  // namespace client

using ClientEvent = std::variant<client::SwitchPress, client::PointerHover, client::PointerSelect,
                                 client::ClockTick, client::ConfigUpdate, client::RunBuffer,
                                 client::ClearBuffer, client::LoadProgram>;

// Engine -> client.
namespace server {
struct Focus {
  FocusPath path;
  /// Empty when the scanner went inactive.
  std::optional<ScanLevel> level;
  bool operator==(const Focus&) const = default;
};
struct KeySelected {
  std::string key_id;
  std::string output;
  bool operator==(const KeySelected&) const = default;
};
struct BufferChanged { std::string text; bool operator==(const BufferChanged&) const = default; };
struct Zoom { std::string key_id; bool operator==(const Zoom&) const = default; };
struct Speak { std::string text; bool operator==(const Speak&) const = default; };
struct Help {
  std::string key_id;
  std::string summary;
  std::vector<logo::Segment> example_segments;
  bool operator==(const Help&) const = default;
};
struct Printed { std::string line; bool operator==(const Printed&) const = default; };
struct TurtleSegments {
  std::vector<logo::Segment> segments;
  bool operator==(const TurtleSegments&) const = default;
};
struct TurtleReset { bool operator==(const TurtleReset&) const = default; };
struct ConfigEcho { EngineConfig config; bool operator==(const ConfigEcho&) const = default; };
struct Error {
  std::string code;
  std::string message;
  bool operator==(const Error&) const = default;
};
/// Sent once when a connection opens so the UI can draw the keyboard.
struct LayoutDocument { std::string document; bool operator==(const LayoutDocument&) const = default; };
}  // namespace server

struct ServerEvent {
  std::uint64_t seq = 0;
  std::variant<server::Focus, server::KeySelected, server::BufferChanged, server::Zoom, server::Speak,
               server::Help, server::Printed, server::TurtleSegments, server::TurtleReset,
               server::ConfigEcho, server::Error, server::LayoutDocument>
      what;

  bool operator==(const ServerEvent&) const = default;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one wire message `{"type": "...", ...}`. Throws ProtocolError for
/// malformed JSON, unknown types, or missing fields, and ConfigError for a
/// config_update whose config has bad field types.
ClientEvent parse_client_event(std::string_view line);
/// One-line JSON (no trailing newline).
std::string serialize_client_event(const ClientEvent& event);

/// One-line JSON `{"seq": N, "type": "...", ...}` (no trailing newline).
std::string serialize_server_event(const ServerEvent& event);

std::string_view type_name(const ClientEvent& event);
std::string_view type_name(const ServerEvent& event);

}  // namespace scanboard::engine
