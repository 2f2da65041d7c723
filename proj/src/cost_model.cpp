#include "scanboard/cost_model.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "scanboard/logo/lexer.hpp"

namespace scanboard {

PhysicalModel PhysicalModel::portuguese() {
  PhysicalModel model;
  for (char c : std::string_view("\"():[]")) model.modifier_map[c] = 1;
  model.count_newlines = true;
  return model;
}

std::string_view to_string(CostMethod method) {
  switch (method) {
    case CostMethod::physical: return "physical";
    case CostMethod::direct: return "direct";
    case CostMethod::scanning: return "scanning";
  }
  return "physical";
}

std::optional<CostMethod> cost_method_from_string(std::string_view text) {
  if (text == "physical") return CostMethod::physical;
  if (text == "direct") return CostMethod::direct;
  if (text == "scanning") return CostMethod::scanning;
  return std::nullopt;
}

std::string canonicalize_program(std::string_view program) {
  std::string out;
  std::string line;
  auto flush = [&] {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (!line.empty()) {
      if (!out.empty()) out.push_back('\n');
      out += line;
    }
    line.clear();
  };
  for (char c : program) {
    if (c == '\n') {
      flush();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      if (!line.empty() && line.back() != ' ') line.push_back(' ');
    } else {
      line.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  flush();
  return out;
}

namespace {

struct Match {
  const KeyDef* key = nullptr;
  std::size_t covered = 0;
  std::size_t cost = 0;
};

// Characters of the canonical text covered by `output` at `pos`, or 0.
std::size_t coverage(std::string_view text, std::size_t pos, std::string_view output) {
  if (output.empty()) return 0;
  if (text.substr(pos, output.size()) == output) return output.size();
  if (output.size() > 1 && output.back() == ' ') {
    auto stem = output.substr(0, output.size() - 1);
    if (text.substr(pos, stem.size()) != stem) return 0;
    std::size_t after = pos + stem.size();
    if (after == text.size() || text[after] == '\n' || !logo::joins_token(stem.back(), text[after])) {
      return stem.size();
    }
  }
  return 0;
}

const KeyDef& control_key(const Layout& layout, std::string_view id, char c, std::size_t pos) {
  const KeyDef* key = layout.lookup(id);
  if (!key) {
    throw PlanError("layout has no '" + std::string(id) + "' key to produce character at offset " +
                        std::to_string(pos),
                    c, pos);
  }
  return *key;
}

}  // namespace

SelectionSequence plan_selections(std::string_view program, const Layout& layout) {
  const std::string text = canonicalize_program(program);
  const auto keys = layout.keys();

  SelectionSequence seq;
  char last = '\0';
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      seq.push_back(control_key(layout, "enter", c, pos).id);
      last = '\n';
      ++pos;
      continue;
    }
    if (c == ' ') {
      // Canonical text never ends with a space.
      if (logo::joins_token(last, text[pos + 1])) {
        seq.push_back(control_key(layout, "space", c, pos).id);
        last = ' ';
      }
      ++pos;
      continue;
    }

    Match best;
    for (const KeyDef* key : keys) {
      if (key->kind == KeyKind::control) continue;
      std::size_t covered = coverage(text, pos, key->output);
      if (covered == 0) continue;
      std::size_t cost = layout.scan_path(key->id).tick_cost();
      if (covered > best.covered || (covered == best.covered && cost < best.cost)) {
        best = Match{key, covered, cost};
      }
    }
    if (!best.key) {
      throw PlanError(std::string("no key produces '") + c + "' at offset " + std::to_string(pos), c, pos);
    }
    seq.push_back(best.key->id);
    last = best.key->output.back();
    pos += best.covered;
  }
  return seq;
}

std::string replay_outputs(const SelectionSequence& seq, const Layout& layout) {
  std::string out;
  for (const auto& id : seq) {
    const KeyDef* key = layout.lookup(id);
    if (!key) throw LayoutError(LayoutError::Kind::unknown_key, "unknown key id '" + id + "'");
    out += key->output;
  }
  return out;
}

CostReport physical_cost(std::string_view program, const PhysicalModel& model) {
  for (const auto& [c, extra] : model.modifier_map) {
    if (extra != 0 && extra != 1) {
      throw std::invalid_argument(std::string("modifier count for '") + c + "' must be 0 or 1");
    }
  }
  std::uint64_t chars = 0;
  std::uint64_t modifiers = 0;
  std::uint64_t lines = 0;
  bool line_open = false;
  for (std::size_t i = 0; i < program.size(); ++i) {
    char c = program[i];
    if (c == '\r' && i + 1 < program.size() && program[i + 1] == '\n') continue;
    if (c == '\n') {
      ++lines;
      line_open = false;
      continue;
    }
    ++chars;
    line_open = true;
    if (auto it = model.modifier_map.find(c); it != model.modifier_map.end()) {
      modifiers += static_cast<std::uint64_t>(it->second);
    }
  }
  if (line_open) ++lines;

  CostReport report;
  report.method = CostMethod::physical;
  report.presses = chars + modifiers + (model.count_newlines ? lines : 0);
  return report;
}

CostReport direct_cost(const SelectionSequence& seq) {
  CostReport report;
  report.method = CostMethod::direct;
  report.presses = seq.size();
  return report;
}

CostReport scanning_cost(const SelectionSequence& seq, const Layout& layout, const ScanConfig& config) {
  config.validate();
  CostReport report;
  report.method = CostMethod::scanning;
  constexpr std::uint64_t kPressesPerSelection = 4;
  report.presses = kPressesPerSelection * seq.size();
  for (const auto& id : seq) report.scan_ticks += layout.scan_path(id).tick_cost();
  report.est_time_ms = report.scan_ticks * static_cast<std::uint64_t>(config.period_ms);
  return report;
}

std::string format_cost_table(const std::vector<CostReport>& reports) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-10s %10s %10s %14s\n", "method", "presses", "ticks", "est_time");
  out += line;
  for (const auto& r : reports) {
    std::string time = std::to_string(r.est_time_ms) + " ms";
    std::snprintf(line, sizeof line, "%-10s %10llu %10llu %14s\n", std::string(to_string(r.method)).c_str(),
                  static_cast<unsigned long long>(r.presses),
                  static_cast<unsigned long long>(r.scan_ticks), time.c_str());
    out += line;
  }
  return out;
}

std::string cost_report_json(const CostReport& report) {
  nlohmann::ordered_json j;
  j["method"] = std::string(to_string(report.method));
  j["presses"] = report.presses;
  j["scan_ticks"] = report.scan_ticks;
  j["est_time_ms"] = report.est_time_ms;
  return j.dump();
}

}  // namespace scanboard
