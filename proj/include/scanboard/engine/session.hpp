#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scanboard/engine/config.hpp"
#include "scanboard/engine/protocol.hpp"
#include "scanboard/layout.hpp"
#include "scanboard/logo/interpreter.hpp"
#include "scanboard/scanner.hpp"

namespace scanboard::engine {

/// Loads `path` as a layout document, or the built-in layout for "builtin".
/// Throws LayoutError or std::runtime_error for unreadable files.
std::shared_ptr<const Layout> load_layout(const std::string& path);

/// One user's keyboard session: layout, scanner, Logo environment, the
/// command buffer, and the active configuration.
///
/// handle() is the single entry point and runs each client event to
/// completion. Nothing here reads a clock; time arrives as clock_tick events,
/// so the same event sequence always yields the same server events. Every
/// failure is reported as an `error` event and the session stays usable.
class Session {
 public:
  /// Throws ConfigError or LayoutError if the starting config is unusable.
  explicit Session(EngineConfig config = {});

  std::vector<ServerEvent> handle(const ClientEvent& event);
  /// Parses one wire line and handles it; malformed input becomes an error event.
  std::vector<ServerEvent> handle_line(std::string_view line);
  /// The `layout` and `config_echo` events sent when a connection opens.
  std::vector<ServerEvent> greeting();

  const std::string& buffer() const { return buffer_; }
  const logo::Environment& environment() const { return env_; }
  const EngineConfig& config() const { return config_; }
  const Scanner& scanner() const { return scanner_; }
  const Layout& layout() const { return *layout_; }
  bool scanning() const { return scanner_.state().mode == ScanMode::scanning; }

 private:
  using Payload = decltype(ServerEvent::what);

  void emit(std::vector<ServerEvent>& out, Payload payload);
  void error(std::vector<ServerEvent>& out, std::string code, std::string message);

  void on_scan_events(const std::vector<ScanEvent>& events, std::vector<ServerEvent>& out);
  void on_selected(const std::string& key_id, std::vector<ServerEvent>& out);
  void on_hover(const std::string& key_id, std::vector<ServerEvent>& out);
  void on_run(std::vector<ServerEvent>& out);
  void on_config(const EngineConfig& config, std::vector<ServerEvent>& out);
  void set_buffer(std::string text, std::vector<ServerEvent>& out);

  const std::vector<logo::Segment>& help_segments(const KeyDef& key);

  EngineConfig config_;
  std::shared_ptr<const Layout> layout_;
  Scanner scanner_;
  logo::Environment env_;
  std::string buffer_;
  /// Output length of each selection since the buffer was last reset.
  std::vector<std::size_t> selections_;
  std::map<std::string, std::vector<logo::Segment>> help_cache_;
  std::uint64_t next_seq_ = 1;
};

/// Feeds each non-empty line of `client_lines` to a fresh session and writes
/// the greeting and every server event, one serialized event per line.
void replay_session(std::istream& client_lines, std::ostream& out, const EngineConfig& config = {});

}  // namespace scanboard::engine
