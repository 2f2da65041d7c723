#include "scanboard/engine/cli.hpp"

#include <csignal>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scanboard/cost_model.hpp"
#include "scanboard/engine/config.hpp"
#include "scanboard/engine/server.hpp"
#include "scanboard/engine/session.hpp"
#include "scanboard/layout.hpp"
#include "scanboard/logo/interpreter.hpp"
#include "scanboard/logo/svg.hpp"

namespace scanboard::engine {

namespace {

constexpr double kSvgCanvas = 400.0;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_run(const std::string& file, const std::string& svg_path, std::ostream& out, std::ostream& err) {
  logo::Environment env;
  auto report = logo::run(read_file(file), env);
  for (const auto& line : report.printed) out << line << "\n";
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary | std::ios::trunc);
    if (!svg) throw std::runtime_error("cannot write " + svg_path);
    svg << logo::segments_to_svg(env.turtle.segments, kSvgCanvas, kSvgCanvas);
  }
  if (report.error) {
    err << file << ": " << logo::to_string(report.error->code()) << ": " << report.error->what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_simulate(const std::string& program_path, const std::string& layout_path,
                 const std::optional<std::string>& method_name, int period_ms, bool json_only,
                 std::ostream& out, std::ostream& err) {
  std::vector<CostMethod> methods{CostMethod::physical, CostMethod::direct, CostMethod::scanning};
  if (method_name) {
    auto method = cost_method_from_string(*method_name);
    if (!method) {
      err << "unknown method '" << *method_name << "'\n";
      return 2;
    }
    methods = {*method};
  }

  const std::string program = read_file(program_path);
  auto layout = load_layout(layout_path);
  ScanConfig scan;
  scan.period_ms = period_ms;
  scan.validate();

  std::vector<CostReport> reports;
  std::optional<SelectionSequence> plan;
  for (auto method : methods) {
    if (method == CostMethod::physical) {
      reports.push_back(physical_cost(program, PhysicalModel::portuguese()));
      continue;
    }
    if (!plan) plan = plan_selections(program, *layout);
    reports.push_back(method == CostMethod::direct ? direct_cost(*plan)
                                                   : scanning_cost(*plan, *layout, scan));
  }

  if (!json_only) out << format_cost_table(reports);
  for (const auto& r : reports) out << cost_report_json(r) << "\n";
  return 0;
}

int cmd_layout_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  Layout layout = parse_layout(read_file(file));
  int failures = 0;
  for (const KeyDef* key : layout.keys()) {
    if (!key->help) continue;
    logo::Environment scratch;
    auto report = logo::run(key->help->example, scratch);
    if (report.error) {
      err << "key '" << key->id << "': help example fails: " << report.error->what() << "\n";
      ++failures;
    }
  }
  if (failures > 0) return 1;
  out << "ok: " << layout.name() << ", " << layout.groups().size() << " groups, " << layout.key_count()
      << " keys\n";
  return 0;
}

int cmd_replay(const std::string& file, std::ostream& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file);
  replay_session(in, out);
  return 0;
}

Server* g_server = nullptr;

extern "C" void stop_server(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(int port, const std::string& profile, std::ostream& out) {
  EngineConfig config;
  std::filesystem::path path = profile.empty() ? default_profile_path() : std::filesystem::path(profile);
  if (std::filesystem::exists(path)) config = load_profile(path);
  config.validate();

  Server server(config, static_cast<std::uint16_t>(port));
  server.start();
  out << "listening on 127.0.0.1:" << server.port() << std::endl;
  g_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);
  server.run();
  g_server = nullptr;
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scanning Logo keyboard engine", "scanboard"};
  app.require_subcommand(1);

  std::string run_file, svg_path;
  auto* run = app.add_subcommand("run", "Run a Logo program headlessly");
  run->add_option("file", run_file, "Logo source file")->required();
  run->add_option("--svg", svg_path, "Write the drawing as SVG");

  std::string program_path, layout_path = "builtin";
  std::optional<std::string> method;
  int period_ms = ScanConfig{}.period_ms;
  bool json_only = false;
  auto* simulate = app.add_subcommand("simulate", "Predict key presses for typing a program");
  simulate->add_option("--program", program_path, "Logo source file")->required();
  simulate->add_option("--layout", layout_path, "Layout document (default: builtin)");
  simulate->add_option("--method", method, "physical, direct or scanning (default: all)");
  simulate->add_option("--period-ms", period_ms, "Scan period in milliseconds");
  simulate->add_flag("--json", json_only, "Only print JSON reports");

  std::string validate_file;
  auto* layout_cmd = app.add_subcommand("layout", "Layout document tools");
  layout_cmd->require_subcommand(1);
  auto* validate = layout_cmd->add_subcommand("validate", "Check a layout document");
  validate->add_option("file", validate_file, "Layout JSON file")->required();

  std::string replay_file;
  auto* replay = app.add_subcommand("replay", "Feed recorded client events to a session and print its events");
  replay->add_option("file", replay_file, "Line-delimited JSON client events")->required();

  int port = kDefaultPort;
  std::string profile;
  auto* serve = app.add_subcommand("serve", "Serve the line-delimited JSON protocol over TCP");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--profile", profile, "Profile file (default: $SCANBOARD_PROFILE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run) return cmd_run(run_file, svg_path, out, err);
    if (*simulate) return cmd_simulate(program_path, layout_path, method, period_ms, json_only, out, err);
    if (*validate) return cmd_layout_validate(validate_file, out, err);
    if (*replay) return cmd_replay(replay_file, out);
    if (*serve) return cmd_serve(port, profile, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace scanboard::engine
