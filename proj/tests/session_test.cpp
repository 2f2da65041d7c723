#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "scanboard/cost_model.hpp"
#include "scanboard/engine/session.hpp"
#include "support/test_support.hpp"

using namespace scanboard;
using namespace scanboard::engine;

namespace {

template <typename T>
std::vector<T> all_of(const std::vector<ServerEvent>& events) {
  std::vector<T> found;
  for (const auto& ev : events) {
    if (const auto* p = std::get_if<T>(&ev.what)) found.push_back(*p);
  }
  return found;
}

std::vector<ServerEvent> select(Session& s, const std::string& id) { return s.handle(client::PointerSelect{id}); }

}  // namespace

TEST(Session, GreetingSendsLayoutAndConfig) {
  Session s;
  auto events = s.greeting();
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].seq, 1u);
  EXPECT_EQ(std::get<server::LayoutDocument>(events[0].what).document, render_layout(default_layout()));
  EXPECT_EQ(std::get<server::ConfigEcho>(events[1].what).config, EngineConfig{});
}

TEST(Session, FirstSwitchPressFocusesGroupZero) {
  Session s;
  auto events = s.handle(client::SwitchPress{});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(std::get<server::Focus>(events[0].what), (server::Focus{{0}, ScanLevel::group}));
  EXPECT_EQ(serialize_server_event(events[0]), R"({"seq":1,"type":"focus","path":[0],"level":"group"})");
}

TEST(Session, PointerTypingAndRun) {
  Session s;
  for (const char* id : {"fd", "3", "0"}) select(s, id);
  EXPECT_EQ(s.buffer(), "fd 30");
  auto events = s.handle(client::RunBuffer{});
  auto drawn = all_of<server::TurtleSegments>(events);
  ASSERT_EQ(drawn.size(), 1u);
  ASSERT_EQ(drawn[0].segments.size(), 1u);
  const auto& seg = drawn[0].segments[0];
  EXPECT_NEAR(std::hypot(seg.x1 - seg.x0, seg.y1 - seg.y0), 30.0, 1e-9);
  EXPECT_EQ(s.buffer(), "");
  EXPECT_EQ(all_of<server::BufferChanged>(events).back().text, "");
}

TEST(Session, SelectionEmitsKeyAndBuffer) {
  Session s;
  auto events = select(s, "fd");
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(std::get<server::KeySelected>(events[0].what), (server::KeySelected{"fd", "fd "}));
  EXPECT_EQ(std::get<server::BufferChanged>(events[1].what).text, "fd ");
}

TEST(Session, InvalidConfigKeepsPrevious) {
  Session s;
  EngineConfig bad;
  bad.transparency = 1.5;
  auto events = s.handle(client::ConfigUpdate{bad});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(std::get<server::Error>(events[0].what).code, "invalid_config");
  EXPECT_EQ(s.config(), EngineConfig{});

  bad = EngineConfig{};
  bad.scan.period_ms = 10;
  EXPECT_EQ(std::get<server::Error>(s.handle(client::ConfigUpdate{bad}).at(0).what).code, "invalid_config");
  bad = EngineConfig{};
  bad.layout_path = "/no/such/layout.json";
  EXPECT_EQ(std::get<server::Error>(s.handle(client::ConfigUpdate{bad}).at(0).what).code, "invalid_config");
  EXPECT_EQ(s.config(), EngineConfig{});
}

TEST(Session, ConfigUpdateRebuildsScanner) {
  Session s;
  s.handle(client::SwitchPress{});
  EngineConfig c;
  c.scan.period_ms = 600;
  c.scan.repeat_cycles = 1;
  auto events = s.handle(client::ConfigUpdate{c});
  EXPECT_EQ(std::get<server::ConfigEcho>(events.at(0).what).config, c);
  EXPECT_EQ(s.scanner().config().period_ms, 600);
  EXPECT_FALSE(s.scanning());

  // Changing only display fields keeps the scan position.
  s.handle(client::SwitchPress{});
  c.transparency = 0.5;
  s.handle(client::ConfigUpdate{c});
  EXPECT_TRUE(s.scanning());
}

TEST(Session, BackspaceRemovesWholeSelection) {
  Session s;
  for (const char* id : {"repeat", "4", "space"}) select(s, id);
  EXPECT_EQ(s.buffer(), "repeat 4 ");
  select(s, "backspace");
  EXPECT_EQ(s.buffer(), "repeat 4");
  select(s, "backspace");
  select(s, "backspace");
  EXPECT_EQ(s.buffer(), "");
  select(s, "backspace");
  EXPECT_EQ(s.buffer(), "");
  select(s, "fd");
  select(s, "clear");
  EXPECT_EQ(s.buffer(), "");
}

TEST(Session, BufferIsConcatenationOfOutputs) {
  std::mt19937_64 rng(3);
  auto keys = default_layout().keys();
  for (int trial = 0; trial < 50; ++trial) {
    Session s;
    SelectionSequence seq;
    for (int i = 0; i < 40; ++i) {
      const KeyDef* k = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
      if (k->id == "backspace" || k->id == "clear") continue;
      seq.push_back(k->id);
      select(s, k->id);
    }
    EXPECT_EQ(s.buffer(), replay_outputs(seq, default_layout()));
  }
}

TEST(Session, ScanningSelectsWithFourPresses) {
  Session s;
  s.handle(client::SwitchPress{});
  ScanPath p = default_layout().scan_path("rt");
  std::vector<ServerEvent> events;
  std::size_t steps[4] = {p.group, p.subgroup, p.row, p.key};
  for (std::size_t level = 0; level < 4; ++level) {
    for (std::size_t i = 0; i < steps[level]; ++i) s.handle(client::ClockTick{});
    events = s.handle(client::SwitchPress{});
  }
  EXPECT_EQ(std::get<server::KeySelected>(events.at(0).what).key_id, "rt");
  EXPECT_EQ(s.buffer(), "rt ");
}

TEST(Session, ZoomOnKeyFocusWhenEnabled) {
  EngineConfig c;
  c.zoom_enabled = true;
  Session s(c);
  for (int i = 0; i < 3; ++i) s.handle(client::SwitchPress{});
  auto events = s.handle(client::SwitchPress{});
  auto zooms = all_of<server::Zoom>(events);
  ASSERT_EQ(zooms.size(), 1u);
  EXPECT_EQ(zooms[0].key_id, default_layout().key_at({0, 0, 0, 0}).id);
}

TEST(Session, HoverGivesHelp) {
  EngineConfig c;
  c.voice_enabled = true;
  Session s(c);
  auto events = s.handle(client::PointerHover{"fd"});
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(std::get<server::Speak>(events[0].what).text, default_layout().lookup("fd")->label);
  const auto& help = std::get<server::Help>(events[1].what);
  EXPECT_EQ(help.key_id, "fd");
  EXPECT_FALSE(help.example_segments.empty());
  EXPECT_EQ(std::get<server::Error>(s.handle(client::PointerHover{"zz"}).at(0).what).code, "unknown_key");
  EXPECT_EQ(std::get<server::Error>(s.handle(client::PointerSelect{"zz"}).at(0).what).code, "unknown_key");
}

TEST(Session, RunReportsPrintedClearAndErrors) {
  Session s;
  s.handle(client::LoadProgram{"fd 10 cs print 2+3*4 bogus"});
  auto events = s.handle(client::RunBuffer{});
  ASSERT_EQ(events.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<server::TurtleReset>(events[0].what));
  EXPECT_EQ(std::get<server::Printed>(events[1].what).line, "14");
  EXPECT_EQ(std::get<server::Error>(events[2].what).code, "logo.unknown_word");
  EXPECT_EQ(std::get<server::BufferChanged>(events[3].what).text, "");

  // Definitions persist across runs.
  s.handle(client::LoadProgram{scanboard::testing::kSquareProgram});
  s.handle(client::RunBuffer{});
  s.handle(client::LoadProgram{"square"});
  auto drawn = all_of<server::TurtleSegments>(s.handle(client::RunBuffer{}));
  ASSERT_EQ(drawn.size(), 1u);
  EXPECT_EQ(drawn[0].segments.size(), 4u);
}

TEST(Session, MalformedLinesBecomeErrors) {
  Session s;
  EXPECT_EQ(std::get<server::Error>(s.handle_line("{oops").at(0).what).code, "protocol");
  EXPECT_EQ(std::get<server::Error>(s.handle_line(R"({"type":"config_update","config":{"zoom_enabled":1}})")
                                        .at(0)
                                        .what)
                .code,
            "invalid_config");
  EXPECT_EQ(s.handle_line(R"({"type":"switch_press"})").size(), 1u);
}

TEST(Session, ReplayIsDeterministicAndGapless) {
  std::string input = scanboard::testing::read_text(scanboard::testing::test_file("session_200.jsonl"));
  std::istringstream a_in(input), b_in(input);
  std::ostringstream a, b;
  replay_session(a_in, a);
  replay_session(b_in, b);
  EXPECT_EQ(a.str(), b.str());

  std::istringstream lines(a.str());
  std::string line;
  std::uint64_t expected = 1;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["seq"].get<std::uint64_t>(), expected++);
  }
  EXPECT_GT(expected, 200u);
}
