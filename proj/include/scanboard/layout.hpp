#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scanboard {

enum class KeyKind { command, letter, digit, symbol, control };

std::string_view to_string(KeyKind kind);
std::optional<KeyKind> key_kind_from_string(std::string_view text);

/// Help shown when the user hovers (or scans) onto a key. `example` is Logo
/// source that the interpreter can run to produce the animated preview.
struct HelpEntry {
  std::string summary;
  std::string example;

  bool operator==(const HelpEntry&) const = default;
};

struct KeyDef {
  std::string id;
  std::string label;
  std::string output;
  KeyKind kind = KeyKind::letter;
  std::optional<HelpEntry> help;

  bool operator==(const KeyDef&) const = default;
};

using Row = std::vector<KeyDef>;

struct Subgroup {
  std::string id;
  std::string label;
  std::vector<Row> rows;

  bool operator==(const Subgroup&) const = default;
};

struct Group {
  std::string id;
  std::string label;
  std::vector<Subgroup> subgroups;

  bool operator==(const Group&) const = default;
};

/// 0-based (group, subgroup, row, key) indices of a key.
struct ScanPath {
  std::size_t group = 0;
  std::size_t subgroup = 0;
  std::size_t row = 0;
  std::size_t key = 0;

  /// Sum of the indices: the number of scan ticks needed to reach the key
  /// when every level starts focused on its first child.
  std::size_t tick_cost() const { return group + subgroup + row + key; }

  auto operator<=>(const ScanPath&) const = default;
};

class LayoutError : public std::runtime_error {
 public:
  enum class Kind { syntax, schema, duplicate_id, empty_container, invalid_key, unknown_key };

  LayoutError(Kind kind, const std::string& message,
              std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}

  Kind kind() const { return kind_; }
  /// Byte offset into the document, for syntax errors.
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  Kind kind_;
  std::optional<std::size_t> offset_;
};

/// The scannable keyboard: groups -> subgroups -> rows -> keys.
///
/// A Layout is validated on construction and immutable afterwards, so any
/// instance satisfies: at least one group, no empty subgroup/row, globally
/// unique key ids, non-empty output for non-control keys, and control keys
/// restricted to enter/space/backspace/clear.
class Layout {
 public:
  Layout(std::string name, std::vector<Group> groups);

  const std::string& name() const { return name_; }
  const std::vector<Group>& groups() const { return groups_; }

  const KeyDef* lookup(std::string_view id) const;
  /// Throws LayoutError(unknown_key) when `id` is not in the layout.
  ScanPath scan_path(std::string_view id) const;
  /// Throws std::out_of_range for an invalid path.
  const KeyDef& key_at(const ScanPath& path) const;

  std::size_t key_count() const { return paths_.size(); }
  /// Every key in scan order (group-major).
  std::vector<const KeyDef*> keys() const;

  bool operator==(const Layout& other) const {
    return name_ == other.name_ && groups_ == other.groups_;
  }

 private:
  std::string name_;
  std::vector<Group> groups_;
  std::unordered_map<std::string, ScanPath> paths_;
};

Layout parse_layout(std::string_view text);

/// Canonical JSON form (authored order, 2-space indent, trailing newline).
std::string render_layout(const Layout& layout);

std::string_view default_layout_document();
const Layout& default_layout();

}  // namespace scanboard
