#include <gtest/gtest.h>

#include <json.hpp>

#include "scanboard/engine/protocol.hpp"

using namespace scanboard;
using namespace scanboard::engine;

TEST(ClientEvents, ParseEachType) {
  EXPECT_EQ(parse_client_event(R"({"type":"switch_press"})"), ClientEvent{client::SwitchPress{}});
  EXPECT_EQ(parse_client_event(R"({"type":"clock_tick"})"), ClientEvent{client::ClockTick{}});
  EXPECT_EQ(parse_client_event(R"({"type":"run_buffer"})"), ClientEvent{client::RunBuffer{}});
  EXPECT_EQ(parse_client_event(R"({"type":"clear_buffer"})"), ClientEvent{client::ClearBuffer{}});
  EXPECT_EQ(parse_client_event(R"({"type":"pointer_hover","key_id":"fd"})"),
            ClientEvent{client::PointerHover{"fd"}});
  EXPECT_EQ(parse_client_event(R"({"type":"pointer_select","key_id":"rt"})"),
            ClientEvent{client::PointerSelect{"rt"}});
  EXPECT_EQ(parse_client_event(R"({"type":"load_program","text":"fd 10"})"),
            ClientEvent{client::LoadProgram{"fd 10"}});

  auto update = parse_client_event(R"({"type":"config_update","config":{"scan":{"period_ms":600},"zoom_enabled":true}})");
  const auto& config = std::get<client::ConfigUpdate>(update).config;
  EXPECT_EQ(config.scan.period_ms, 600);
  EXPECT_EQ(config.scan.repeat_cycles, 2);
  EXPECT_TRUE(config.zoom_enabled);
}

TEST(ClientEvents, Malformed) {
  for (const char* line : {"", "not json", "[1,2]", R"({"kind":"switch_press"})", R"({"type":"warp"})",
                           R"({"type":"pointer_select"})", R"({"type":"pointer_select","key_id":3})",
                           R"({"type":"load_program"})", R"({"type":"config_update","config":5})"}) {
    EXPECT_THROW(parse_client_event(line), ProtocolError) << line;
  }
  EXPECT_THROW(parse_client_event(R"({"type":"config_update","config":{"transparency":"high"}})"), ConfigError);
  EXPECT_THROW(parse_client_event(R"({"type":"config_update","config":{"scan":{"post_select":"sideways"}}})"),
               ConfigError);
}

TEST(ClientEvents, RoundTrip) {
  EngineConfig config;
  config.scan.period_ms = 750;
  config.scan.post_select = PostSelect::stay_in_row;
  config.transparency = 0.25;
  config.voice_enabled = true;
  std::vector<ClientEvent> events{client::SwitchPress{},    client::PointerHover{"fd"},
                                  client::PointerSelect{"sym_quote"}, client::ClockTick{},
                                  client::ConfigUpdate{config}, client::RunBuffer{},
                                  client::ClearBuffer{},    client::LoadProgram{"to sq\n\"x [1]\nend"}};
  for (const auto& ev : events) {
    EXPECT_EQ(parse_client_event(serialize_client_event(ev)), ev) << serialize_client_event(ev);
  }
}

TEST(ServerEvents, Serialization) {
  EXPECT_EQ(serialize_server_event({3, server::Focus{{1, 0}, ScanLevel::subgroup}}),
            R"({"seq":3,"type":"focus","path":[1,0],"level":"subgroup"})");
  EXPECT_EQ(serialize_server_event({4, server::Focus{{}, std::nullopt}}),
            R"({"seq":4,"type":"focus","path":[],"level":"inactive"})");
  EXPECT_EQ(serialize_server_event({5, server::KeySelected{"fd", "fd "}}),
            R"({"seq":5,"type":"key_selected","key_id":"fd","output":"fd "})");
  EXPECT_EQ(serialize_server_event({6, server::TurtleSegments{{{0, 0, 0, 30}}}}),
            R"({"seq":6,"type":"turtle_segments","segments":[[0.0,0.0,0.0,30.0]]})");
  EXPECT_EQ(serialize_server_event({7, server::Error{"logo.unknown_word", "boom"}}),
            R"({"seq":7,"type":"error","code":"logo.unknown_word","message":"boom"})");
  EXPECT_EQ(serialize_server_event({8, server::TurtleReset{}}), R"({"seq":8,"type":"turtle_reset"})");
  EXPECT_EQ(serialize_server_event({9, server::Printed{"14"}}), R"({"seq":9,"type":"printed","line":"14"})");

  auto layout = nlohmann::json::parse(
      serialize_server_event({1, server::LayoutDocument{render_layout(default_layout())}}));
  EXPECT_EQ(layout["type"], "layout");
  EXPECT_EQ(layout["layout"]["groups"].size(), 2u);

  auto echo = nlohmann::json::parse(serialize_server_event({2, server::ConfigEcho{EngineConfig{}}}));
  EXPECT_EQ(config_from_json(echo["config"]), EngineConfig{});
}
