#include "scanboard/engine/session.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scanboard::engine {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::shared_ptr<const Layout> checked_layout(const EngineConfig& config) {
  config.validate();
  return load_layout(config.layout_path);
}

}  // namespace

std::shared_ptr<const Layout> load_layout(const std::string& path) {
  if (path == "builtin") return std::make_shared<const Layout>(default_layout());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read layout " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const Layout>(parse_layout(buf.str()));
}

Session::Session(EngineConfig config)
    : config_(std::move(config)), layout_(checked_layout(config_)), scanner_(layout_, config_.scan) {}

void Session::emit(std::vector<ServerEvent>& out, Payload payload) {
  out.push_back(ServerEvent{next_seq_++, std::move(payload)});
}

void Session::error(std::vector<ServerEvent>& out, std::string code, std::string message) {
  emit(out, server::Error{std::move(code), std::move(message)});
}

std::vector<ServerEvent> Session::greeting() {
  std::vector<ServerEvent> out;
  emit(out, server::LayoutDocument{render_layout(*layout_)});
  emit(out, server::ConfigEcho{config_});
  return out;
}

std::vector<ServerEvent> Session::handle_line(std::string_view line) {
  try {
    return handle(parse_client_event(line));
  } catch (const ProtocolError& e) {
    std::vector<ServerEvent> out;
    error(out, "protocol", e.what());
    return out;
  } catch (const ConfigError& e) {
    std::vector<ServerEvent> out;
    error(out, "invalid_config", e.what());
    return out;
  }
}

std::vector<ServerEvent> Session::handle(const ClientEvent& event) {
  std::vector<ServerEvent> out;
  try {
    std::visit(overloaded{
                   [&](const client::SwitchPress&) { on_scan_events(scanner_.press(), out); },
                   [&](const client::ClockTick&) { on_scan_events(scanner_.tick(), out); },
                   [&](const client::PointerSelect& e) {
                     if (!layout_->lookup(e.key_id)) {
                       error(out, "unknown_key", "unknown key id '" + e.key_id + "'");
                       return;
                     }
                     on_scan_events(scanner_.pointer_select(e.key_id), out);
                   },
                   [&](const client::PointerHover& e) { on_hover(e.key_id, out); },
                   [&](const client::ConfigUpdate& e) { on_config(e.config, out); },
                   [&](const client::RunBuffer&) { on_run(out); },
                   [&](const client::ClearBuffer&) {
                     selections_.clear();
                     set_buffer({}, out);
                   },
                   [&](const client::LoadProgram& e) {
                     selections_.clear();
                     if (!e.text.empty()) selections_.push_back(e.text.size());
                     set_buffer(e.text, out);
                   },
               },
               event);
  } catch (const std::exception& e) {
    error(out, "internal", e.what());
  }
  return out;
}

void Session::on_scan_events(const std::vector<ScanEvent>& events, std::vector<ServerEvent>& out) {
  for (const auto& ev : events) {
    std::visit(overloaded{
                   [&](const scan_event::FocusChanged& e) {
                     emit(out, server::Focus{e.path, e.level});
                     if (config_.zoom_enabled && e.level == ScanLevel::key) {
                       if (const KeyDef* key = scanner_.focused_key()) emit(out, server::Zoom{key->id});
                     }
                   },
                   // The focus_changed that follows carries the new position.
                   [](const scan_event::Descended&) {},
                   [&](const scan_event::Ascended& e) {
                     emit(out, server::Focus{scanner_.state().focus_path(), e.level});
                   },
                   [&](const scan_event::Deactivated&) { emit(out, server::Focus{{}, std::nullopt}); },
                   [&](const scan_event::Selected& e) { on_selected(e.key_id, out); },
               },
               ev.what);
  }
}

void Session::set_buffer(std::string text, std::vector<ServerEvent>& out) {
  buffer_ = std::move(text);
  emit(out, server::BufferChanged{buffer_});
}

void Session::on_selected(const std::string& key_id, std::vector<ServerEvent>& out) {
  const KeyDef& key = *layout_->lookup(key_id);
  emit(out, server::KeySelected{key.id, key.output});

  if (key.kind == KeyKind::control && key.id == "backspace") {
    if (!selections_.empty()) {
      buffer_.erase(buffer_.size() - selections_.back());
      selections_.pop_back();
    }
  } else if (key.kind == KeyKind::control && key.id == "clear") {
    buffer_.clear();
    selections_.clear();
  } else {
    std::string text = key.output;
    if (key.kind == KeyKind::control && text.empty()) text = key.id == "enter" ? "\n" : " ";
    buffer_ += text;
    selections_.push_back(text.size());
  }
  emit(out, server::BufferChanged{buffer_});
}

const std::vector<logo::Segment>& Session::help_segments(const KeyDef& key) {
  auto it = help_cache_.find(key.id);
  if (it == help_cache_.end()) {
    logo::Environment scratch;
    auto report = logo::run(key.help->example, scratch);
    it = help_cache_.emplace(key.id, std::move(report.segments)).first;
  }
  return it->second;
}

void Session::on_hover(const std::string& key_id, std::vector<ServerEvent>& out) {
  const KeyDef* key = layout_->lookup(key_id);
  if (!key) {
    error(out, "unknown_key", "unknown key id '" + key_id + "'");
    return;
  }
  if (config_.zoom_enabled) emit(out, server::Zoom{key->id});
  if (config_.voice_enabled) emit(out, server::Speak{key->label});
  if (key->help) emit(out, server::Help{key->id, key->help->summary, help_segments(*key)});
}

void Session::on_run(std::vector<ServerEvent>& out) {
  auto report = logo::run(buffer_, env_);
  if (report.cleared) emit(out, server::TurtleReset{});
  for (auto& line : report.printed) emit(out, server::Printed{std::move(line)});
  if (!report.segments.empty()) emit(out, server::TurtleSegments{std::move(report.segments)});
  if (report.error) {
    error(out, "logo." + std::string(logo::to_string(report.error->code())), report.error->what());
  }
  selections_.clear();
  set_buffer({}, out);
}

void Session::on_config(const EngineConfig& config, std::vector<ServerEvent>& out) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    error(out, "invalid_config", e.what());
    return;
  }

  auto layout = layout_;
  if (config.layout_path != config_.layout_path) {
    try {
      layout = load_layout(config.layout_path);
    } catch (const std::exception& e) {
      error(out, "invalid_config", e.what());
      return;
    }
    help_cache_.clear();
  }
  if (layout != layout_ || !(config.scan == config_.scan)) scanner_ = Scanner(layout, config.scan);
  layout_ = std::move(layout);
  config_ = config;
  emit(out, server::ConfigEcho{config_});
}

void replay_session(std::istream& client_lines, std::ostream& out, const EngineConfig& config) {
  Session session(config);
  for (const auto& ev : session.greeting()) out << serialize_server_event(ev) << "\n";
  std::string line;
  while (std::getline(client_lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (const auto& ev : session.handle_line(line)) out << serialize_server_event(ev) << "\n";
  }
}

}  // namespace scanboard::engine
