#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scanboard/layout.hpp"

namespace scanboard {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

enum class PostSelect { reset_to_top, stay_in_row };

std::string_view to_string(PostSelect post);
std::optional<PostSelect> post_select_from_string(std::string_view text);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScanConfig {
  static constexpr int kMinPeriodMs = 50;

  int period_ms = 1000;
  int repeat_cycles = 2;
  bool sound_on = true;
  Rgb highlight_color{255, 200, 0};
  PostSelect post_select = PostSelect::reset_to_top;

  /// Throws ConfigError when period_ms < 50 or repeat_cycles < 1.
  void validate() const;

  bool operator==(const ScanConfig&) const = default;
};

enum class ScanLevel { group = 0, subgroup = 1, row = 2, key = 3 };

std::string_view to_string(ScanLevel level);

enum class ScanMode { inactive, scanning };

/// Indices from the group down to the current level (size = level + 1).
using FocusPath = std::vector<std::size_t>;

namespace scan_event {
struct FocusChanged {
  FocusPath path;
  ScanLevel level;
  bool operator==(const FocusChanged&) const = default;
};
struct Descended {
  FocusPath path;
  ScanLevel level;
  bool operator==(const Descended&) const = default;
};
struct Selected {
  std::string key_id;
  bool operator==(const Selected&) const = default;
};
struct Ascended {
  ScanLevel level;
  bool operator==(const Ascended&) const = default;
};
struct Deactivated {
  bool operator==(const Deactivated&) const = default;
};
}  // namespace scan_event

struct ScanEvent {
  std::variant<scan_event::FocusChanged, scan_event::Descended, scan_event::Selected,
               scan_event::Ascended, scan_event::Deactivated>
      what;
  /// Ticks processed while scanning, at the time of the event.
  std::uint64_t tick_index = 0;

  bool operator==(const ScanEvent&) const = default;
};

struct ScannerState {
  ScanMode mode = ScanMode::inactive;
  ScanLevel level = ScanLevel::group;
  /// Entries past `level` are meaningless and kept at 0.
  std::array<std::size_t, 4> focus{};
  int wraps_at_level = 0;

  FocusPath focus_path() const;

  bool operator==(const ScannerState&) const = default;
};

/// Hierarchical single-switch scanning automaton.
///
/// Time is injected: each tick() advances the focus among the siblings of the
/// current level; press() descends one level or, at key level, selects. When
/// the focus has wrapped repeat_cycles times at one level the scanner climbs
/// to the parent level (or goes inactive at the top).
class Scanner {
 public:
  /// Throws ConfigError for an invalid config.
  Scanner(std::shared_ptr<const Layout> layout, ScanConfig config);

  std::vector<ScanEvent> press();
  std::vector<ScanEvent> tick();
  /// Throws LayoutError(unknown_key) for an id not in the layout.
  std::vector<ScanEvent> pointer_select(std::string_view key_id);

  const ScannerState& state() const { return state_; }
  const ScanConfig& config() const { return config_; }
  const Layout& layout() const { return *layout_; }

  /// The key under focus when scanning at key level.
  const KeyDef* focused_key() const;

 private:
  std::size_t sibling_count() const;
  ScanEvent make(decltype(ScanEvent::what) what) const { return ScanEvent{std::move(what), ticks_}; }
  void reset_to_top();

  std::shared_ptr<const Layout> layout_;
  ScanConfig config_;
  ScannerState state_;
  std::uint64_t ticks_ = 0;
};

}  // namespace scanboard
