#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "scanboard/engine/config.hpp"
#include "scanboard/engine/session.hpp"

using namespace scanboard;
using namespace scanboard::engine;
namespace fs = std::filesystem;

namespace {

class ProfileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scanboard_profile_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_F(ProfileTest, RoundTrip) {
  EngineConfig c;
  c.scan.period_ms = 600;
  c.scan.repeat_cycles = 3;
  c.scan.sound_on = false;
  c.scan.highlight_color = {10, 20, 30};
  c.scan.post_select = PostSelect::stay_in_row;
  c.transparency = 0.4;
  c.zoom_enabled = true;
  c.voice_enabled = true;
  c.keyboard_scale = 1.5;
  c.layout_path = "layouts/custom.json";
  save_profile(c, dir_ / "p.json");
  EXPECT_EQ(load_profile(dir_ / "p.json"), c);
  EXPECT_FALSE(fs::exists(dir_ / "p.json.tmp"));
}

TEST_F(ProfileTest, MissingFieldsTakeDefaults) {
  write(dir_ / "p.json", R"({"scan":{"period_ms":700}})");
  EngineConfig expected;
  expected.scan.period_ms = 700;
  EXPECT_EQ(load_profile(dir_ / "p.json"), expected);
}

TEST_F(ProfileTest, CorruptedFilesFailLoudly) {
  write(dir_ / "truncated.json", R"({"scan":{"period_ms":)");
  EXPECT_THROW(load_profile(dir_ / "truncated.json"), ProfileError);
  write(dir_ / "types.json", R"({"transparency":"clear"})");
  EXPECT_THROW(load_profile(dir_ / "types.json"), ProfileError);
  write(dir_ / "range.json", R"({"keyboard_scale":9})");
  EXPECT_THROW(load_profile(dir_ / "range.json"), ProfileError);
  EXPECT_THROW(load_profile(dir_ / "absent.json"), ProfileError);
}

TEST_F(ProfileTest, LoadedProfileDrivesScanner) {
  EngineConfig c;
  c.scan.period_ms = 600;
  c.scan.repeat_cycles = 2;
  save_profile(c, dir_ / "p.json");

  Session s;
  auto events = s.handle(client::ConfigUpdate{load_profile(dir_ / "p.json")});
  EXPECT_EQ(std::get<server::ConfigEcho>(events.at(0).what).config.scan.period_ms, 600);
  EXPECT_EQ(s.scanner().config().period_ms, 600);
  EXPECT_EQ(s.scanner().config().repeat_cycles, 2);

  // Two cycles over the two groups, then the scanner stops.
  s.handle(client::SwitchPress{});
  for (int i = 0; i < 3; ++i) s.handle(client::ClockTick{});
  EXPECT_TRUE(s.scanning());
  s.handle(client::ClockTick{});
  EXPECT_FALSE(s.scanning());
}

TEST_F(ProfileTest, DefaultPathFollowsEnvironment) {
  ::setenv("SCANBOARD_PROFILE", (dir_ / "env.json").c_str(), 1);
  EXPECT_EQ(default_profile_path(), dir_ / "env.json");
  ::unsetenv("SCANBOARD_PROFILE");
  if (const char* home = std::getenv("HOME")) {
    EXPECT_EQ(default_profile_path(), fs::path(home) / ".scanboard_profile.json");
  }
}
