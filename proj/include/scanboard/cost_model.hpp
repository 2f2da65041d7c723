#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scanboard/layout.hpp"
#include "scanboard/scanner.hpp"

namespace scanboard {

/// Key ids, in selection order, that type a program on the virtual keyboard.
using SelectionSequence = std::vector<std::string>;

/// Physical keyboard model: extra presses per character that needs a
/// modifier (Shift/AltGr) and whether each line costs an Enter.
struct PhysicalModel {
  std::map<char, int> modifier_map;
  bool count_newlines = true;

  /// Portuguese layout: `"` `(` `)` `:` need Shift, `[` `]` need AltGr.
  static PhysicalModel portuguese();
};

enum class CostMethod { physical, direct, scanning };

std::string_view to_string(CostMethod method);
std::optional<CostMethod> cost_method_from_string(std::string_view text);

struct CostReport {
  CostMethod method = CostMethod::physical;
  std::uint64_t presses = 0;
  std::uint64_t scan_ticks = 0;
  /// scan_ticks * period_ms; a lower bound with zero reaction time.
  std::uint64_t est_time_ms = 0;

  bool operator==(const CostReport&) const = default;
};

class PlanError : public std::runtime_error {
 public:
  PlanError(const std::string& message, char character, std::size_t offset)
      : std::runtime_error(message), character_(character), offset_(offset) {}

  char character() const { return character_; }
  /// Offset into the canonical program text.
  std::size_t offset() const { return offset_; }

 private:
  char character_;
  std::size_t offset_;
};

/// Lowercased, each line trimmed, whitespace runs collapsed to one space,
/// blank lines dropped, lines joined with '\n' and no trailing newline.
std::string canonicalize_program(std::string_view program);

/// Greedy longest-output-first plan of key selections for `program`.
///
/// At each position the key whose output covers the longest prefix of the
/// remaining canonical text wins; a command key ending in a space also covers
/// a bare word followed by a token boundary. Spaces between tokens that would
/// not merge are free; otherwise the `space` key is selected. Line breaks
/// select `enter`. Ties go to the cheaper scan path, then layout order.
/// Throws PlanError for a character no key produces.
SelectionSequence plan_selections(std::string_view program, const Layout& layout);

/// Concatenated outputs of the selected keys.
std::string replay_outputs(const SelectionSequence& seq, const Layout& layout);

CostReport physical_cost(std::string_view program, const PhysicalModel& model);
CostReport direct_cost(const SelectionSequence& seq);
/// Throws LayoutError(unknown_key) for an id not in the layout.
CostReport scanning_cost(const SelectionSequence& seq, const Layout& layout, const ScanConfig& config);

std::string format_cost_table(const std::vector<CostReport>& reports);
/// `{"method":..,"presses":..,"scan_ticks":..,"est_time_ms":..}`
std::string cost_report_json(const CostReport& report);

}  // namespace scanboard
