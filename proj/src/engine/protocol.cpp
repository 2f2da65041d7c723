#include "scanboard/engine/protocol.hpp"

#include <type_traits>

namespace scanboard::engine {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string require_key_id(const json& j, std::string_view type) {
  auto it = j.find("key_id");
  if (it == j.end() || !it->is_string()) {
    throw ProtocolError(std::string(type) + " needs a string 'key_id'");
  }
  return it->get<std::string>();
}

ordered_json segments_json(const std::vector<logo::Segment>& segments) {
  auto arr = ordered_json::array();
  for (const auto& s : segments) arr.push_back({s.x0, s.y0, s.x1, s.y1});
  return arr;
}

}  // namespace

std::string_view type_name(const ClientEvent& event) {
  return std::visit(overloaded{
                        [](const client::SwitchPress&) { return "switch_press"; },
                        [](const client::PointerHover&) { return "pointer_hover"; },
                        [](const client::PointerSelect&) { return "pointer_select"; },
                        [](const client::ClockTick&) { return "clock_tick"; },
                        [](const client::ConfigUpdate&) { return "config_update"; },
                        [](const client::RunBuffer&) { return "run_buffer"; },
                        [](const client::ClearBuffer&) { return "clear_buffer"; },
                        [](const client::LoadProgram&) { return "load_program"; },
                    },
                    event);
}

std::string_view type_name(const ServerEvent& event) {
  return std::visit(overloaded{
                        [](const server::Focus&) { return "focus"; },
                        [](const server::KeySelected&) { return "key_selected"; },
                        [](const server::BufferChanged&) { return "buffer_changed"; },
                        [](const server::Zoom&) { return "zoom"; },
                        [](const server::Speak&) { return "speak"; },
                        [](const server::Help&) { return "help"; },
                        [](const server::Printed&) { return "printed"; },
                        [](const server::TurtleSegments&) { return "turtle_segments"; },
                        [](const server::TurtleReset&) { return "turtle_reset"; },
                        [](const server::ConfigEcho&) { return "config_echo"; },
                        [](const server::Error&) { return "error"; },
                        [](const server::LayoutDocument&) { return "layout"; },
                    },
                    event.what);
}

ClientEvent parse_client_event(std::string_view line) {
  json j;
  try {
    j = json::parse(line.begin(), line.end());
  } catch (const json::parse_error& e) {
    throw ProtocolError(std::string("malformed message: ") + e.what());
  }
  if (!j.is_object()) throw ProtocolError("message must be a JSON object");
  auto type_it = j.find("type");
  if (type_it == j.end() || !type_it->is_string()) throw ProtocolError("message needs a string 'type'");
  const auto type = type_it->get<std::string>();

  if (type == "switch_press") return client::SwitchPress{};
  if (type == "clock_tick") return client::ClockTick{};
  if (type == "run_buffer") return client::RunBuffer{};
  if (type == "clear_buffer") return client::ClearBuffer{};
  if (type == "pointer_hover") return client::PointerHover{require_key_id(j, type)};
  if (type == "pointer_select") return client::PointerSelect{require_key_id(j, type)};
  if (type == "load_program") {
    auto it = j.find("text");
    if (it == j.end() || !it->is_string()) throw ProtocolError("load_program needs a string 'text'");
    return client::LoadProgram{it->get<std::string>()};
  }
  if (type == "config_update") {
    auto it = j.find("config");
    if (it == j.end() || !it->is_object()) throw ProtocolError("config_update needs an object 'config'");
    return client::ConfigUpdate{config_from_json(*it)};
  }
  throw ProtocolError("unknown message type '" + type + "'");
}

std::string serialize_client_event(const ClientEvent& event) {
  ordered_json j;
  j["type"] = std::string(type_name(event));
  std::visit(overloaded{
                 [&](const client::PointerHover& e) { j["key_id"] = e.key_id; },
                 [&](const client::PointerSelect& e) { j["key_id"] = e.key_id; },
                 [&](const client::ConfigUpdate& e) { j["config"] = config_to_json(e.config); },
                 [&](const client::LoadProgram& e) { j["text"] = e.text; },
                 [](const auto&) {},
             },
             event);
  return j.dump();
}

std::string serialize_server_event(const ServerEvent& event) {
  ordered_json j;
  j["seq"] = event.seq;
  j["type"] = std::string(type_name(event));
  std::visit(overloaded{
                 [&](const server::Focus& e) {
                   j["path"] = e.path;
                   j["level"] = e.level ? std::string(to_string(*e.level)) : std::string("inactive");
                 },
                 [&](const server::KeySelected& e) {
                   j["key_id"] = e.key_id;
                   j["output"] = e.output;
                 },
                 [&](const server::BufferChanged& e) { j["text"] = e.text; },
                 [&](const server::Zoom& e) { j["key_id"] = e.key_id; },
                 [&](const server::Speak& e) { j["text"] = e.text; },
                 [&](const server::Help& e) {
                   j["key_id"] = e.key_id;
                   j["summary"] = e.summary;
                   j["example_segments"] = segments_json(e.example_segments);
                 },
                 [&](const server::Printed& e) { j["line"] = e.line; },
                 [&](const server::TurtleSegments& e) { j["segments"] = segments_json(e.segments); },
                 [](const server::TurtleReset&) {},
                 [&](const server::ConfigEcho& e) { j["config"] = config_to_json(e.config); },
                 [&](const server::Error& e) {
                   j["code"] = e.code;
                   j["message"] = e.message;
                 },
                 [&](const server::LayoutDocument& e) { j["layout"] = ordered_json::parse(e.document); },
             },
             event.what);
  return j.dump();
}

}  // namespace scanboard::engine
