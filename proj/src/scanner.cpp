#include "scanboard/scanner.hpp"

#include <utility>

namespace scanboard {

std::string_view to_string(PostSelect post) {
  return post == PostSelect::reset_to_top ? "reset_to_top" : "stay_in_row";
}

std::optional<PostSelect> post_select_from_string(std::string_view text) {
  if (text == "reset_to_top") return PostSelect::reset_to_top;
  if (text == "stay_in_row") return PostSelect::stay_in_row;
  return std::nullopt;
}

std::string_view to_string(ScanLevel level) {
  switch (level) {
    case ScanLevel::group: return "group";
    case ScanLevel::subgroup: return "subgroup";
    case ScanLevel::row: return "row";
    case ScanLevel::key: return "key";
  }
  return "group";
}

void ScanConfig::validate() const {
  if (period_ms < kMinPeriodMs) {
    throw ConfigError("period_ms must be at least " + std::to_string(kMinPeriodMs) +
                      " (got " + std::to_string(period_ms) + ")");
  }
  if (repeat_cycles < 1) {
    throw ConfigError("repeat_cycles must be at least 1 (got " + std::to_string(repeat_cycles) + ")");
  }
}

FocusPath ScannerState::focus_path() const {
  if (mode == ScanMode::inactive) return {};
  auto depth = static_cast<std::size_t>(level) + 1;
  return FocusPath(focus.begin(), focus.begin() + static_cast<std::ptrdiff_t>(depth));
}

Scanner::Scanner(std::shared_ptr<const Layout> layout, ScanConfig config)
    : layout_(std::move(layout)), config_(config) {
  if (!layout_) throw std::invalid_argument("scanner needs a layout");
  config_.validate();
}

std::size_t Scanner::sibling_count() const {
  const auto& f = state_.focus;
  const auto& groups = layout_->groups();
  switch (state_.level) {
    case ScanLevel::group: return groups.size();
    case ScanLevel::subgroup: return groups[f[0]].subgroups.size();
    case ScanLevel::row: return groups[f[0]].subgroups[f[1]].rows.size();
    case ScanLevel::key: return groups[f[0]].subgroups[f[1]].rows[f[2]].size();
  }
  return 1;
}

const KeyDef* Scanner::focused_key() const {
  if (state_.mode != ScanMode::scanning || state_.level != ScanLevel::key) return nullptr;
  const auto& f = state_.focus;
  return &layout_->key_at(ScanPath{f[0], f[1], f[2], f[3]});
}

void Scanner::reset_to_top() {
  state_.level = ScanLevel::group;
  state_.focus = {};
  state_.wraps_at_level = 0;
}

std::vector<ScanEvent> Scanner::press() {
  using namespace scan_event;
  std::vector<ScanEvent> events;

  if (state_.mode == ScanMode::inactive) {
    state_.mode = ScanMode::scanning;
    reset_to_top();
    events.push_back(make(FocusChanged{state_.focus_path(), state_.level}));
    return events;
  }

  if (state_.level == ScanLevel::key) {
    events.push_back(make(Selected{focused_key()->id}));
    if (config_.post_select == PostSelect::reset_to_top) {
      reset_to_top();
      events.push_back(make(FocusChanged{state_.focus_path(), state_.level}));
    }
    return events;
  }

  auto child = static_cast<std::size_t>(state_.level) + 1;
  state_.level = static_cast<ScanLevel>(child);
  state_.focus[child] = 0;
  state_.wraps_at_level = 0;
  events.push_back(make(Descended{state_.focus_path(), state_.level}));
  events.push_back(make(FocusChanged{state_.focus_path(), state_.level}));
  return events;
}

std::vector<ScanEvent> Scanner::tick() {
  using namespace scan_event;
  std::vector<ScanEvent> events;
  if (state_.mode == ScanMode::inactive) return events;

  ++ticks_;
  auto depth = static_cast<std::size_t>(state_.level);
  auto& index = state_.focus[depth];
  index = (index + 1) % sibling_count();
  if (index == 0) ++state_.wraps_at_level;

  if (state_.wraps_at_level >= config_.repeat_cycles) {
    state_.wraps_at_level = 0;
    if (state_.level == ScanLevel::group) {
      state_.mode = ScanMode::inactive;
      state_.focus = {};
      events.push_back(make(Deactivated{}));
    } else {
      index = 0;
      state_.level = static_cast<ScanLevel>(depth - 1);
      events.push_back(make(Ascended{state_.level}));
    }
    return events;
  }

  events.push_back(make(FocusChanged{state_.focus_path(), state_.level}));
  return events;
}

std::vector<ScanEvent> Scanner::pointer_select(std::string_view key_id) {
  if (!layout_->lookup(key_id)) {
    throw LayoutError(LayoutError::Kind::unknown_key, "unknown key id '" + std::string(key_id) + "'");
  }
  return {make(scan_event::Selected{std::string(key_id)})};
}

}  // namespace scanboard
