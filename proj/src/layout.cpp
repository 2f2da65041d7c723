#include "scanboard/layout.hpp"

#include <array>
#include <utility>

#include <json.hpp>

namespace scanboard {

namespace detail {
extern const std::string_view kDefaultLayoutDocument;
}

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 4> kControlIds = {"enter", "space", "backspace", "clear"};

bool is_control_id(std::string_view id) {
  for (auto c : kControlIds) {
    if (c == id) return true;
  }
  return false;
}

// Reads a required string member, reporting the JSON pointer-ish location.
std::string require_string(const ordered_json& obj, const char* field, const std::string& where) {
  if (!obj.is_object()) throw LayoutError(LayoutError::Kind::schema, where + ": expected an object");
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw LayoutError(LayoutError::Kind::schema,
                      where + ": missing string field '" + field + "'");
  }
  return it->get<std::string>();
}

const ordered_json& require_array(const ordered_json& obj, const char* field, const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_array()) {
    throw LayoutError(LayoutError::Kind::schema,
                      where + ": missing array field '" + field + "'");
  }
  return *it;
}

KeyDef parse_key(const ordered_json& j, const std::string& where) {
  KeyDef key;
  key.id = require_string(j, "id", where);
  key.label = require_string(j, "label", where);
  key.output = require_string(j, "output", where);
  auto kind_text = require_string(j, "kind", where);
  auto kind = key_kind_from_string(kind_text);
  if (!kind) {
    throw LayoutError(LayoutError::Kind::schema, where + ": unknown key kind '" + kind_text + "'");
  }
  key.kind = *kind;
  if (auto it = j.find("help"); it != j.end()) {
    HelpEntry help;
    help.summary = require_string(*it, "summary", where + ".help");
    help.example = require_string(*it, "example", where + ".help");
    key.help = std::move(help);
  }
  return key;
}

ordered_json key_to_json(const KeyDef& key) {
  ordered_json j;
  j["id"] = key.id;
  j["label"] = key.label;
  j["output"] = key.output;
  j["kind"] = std::string(to_string(key.kind));
  if (key.help) {
    ordered_json h;
    h["summary"] = key.help->summary;
    h["example"] = key.help->example;
    j["help"] = std::move(h);
  }
  return j;
}

}  // namespace

std::string_view to_string(KeyKind kind) {
  switch (kind) {
    case KeyKind::command: return "command";
    case KeyKind::letter: return "letter";
    case KeyKind::digit: return "digit";
    case KeyKind::symbol: return "symbol";
    case KeyKind::control: return "control";
  }
  return "letter";
}

std::optional<KeyKind> key_kind_from_string(std::string_view text) {
  if (text == "command") return KeyKind::command;
  if (text == "letter") return KeyKind::letter;
  if (text == "digit") return KeyKind::digit;
  if (text == "symbol") return KeyKind::symbol;
  if (text == "control") return KeyKind::control;
  return std::nullopt;
}

Layout::Layout(std::string name, std::vector<Group> groups)
    : name_(std::move(name)), groups_(std::move(groups)) {
  using Kind = LayoutError::Kind;
  if (groups_.empty()) throw LayoutError(Kind::empty_container, "layout has no groups");

  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const auto& group = groups_[g];
    if (group.subgroups.empty()) {
      throw LayoutError(Kind::empty_container, "group '" + group.id + "' has no subgroups");
    }
    for (std::size_t s = 0; s < group.subgroups.size(); ++s) {
      const auto& sub = group.subgroups[s];
      if (sub.rows.empty()) {
        throw LayoutError(Kind::empty_container, "subgroup '" + sub.id + "' has no rows");
      }
      for (std::size_t r = 0; r < sub.rows.size(); ++r) {
        const auto& row = sub.rows[r];
        if (row.empty()) {
          throw LayoutError(Kind::empty_container,
                            "row " + std::to_string(r) + " of subgroup '" + sub.id + "' is empty");
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
          const auto& key = row[k];
          if (key.id.empty()) throw LayoutError(Kind::invalid_key, "key with empty id");
          if (key.kind == KeyKind::control && !is_control_id(key.id)) {
            throw LayoutError(Kind::invalid_key,
                              "control key '" + key.id + "' must be enter, space, backspace or clear");
          }
          if (key.kind != KeyKind::control && key.output.empty()) {
            throw LayoutError(Kind::invalid_key, "key '" + key.id + "' has empty output");
          }
          auto [it, inserted] = paths_.emplace(key.id, ScanPath{g, s, r, k});
          if (!inserted) throw LayoutError(Kind::duplicate_id, "duplicate key id '" + key.id + "'");
        }
      }
    }
  }
}

const KeyDef* Layout::lookup(std::string_view id) const {
  auto it = paths_.find(std::string(id));
  if (it == paths_.end()) return nullptr;
  return &key_at(it->second);
}

ScanPath Layout::scan_path(std::string_view id) const {
  auto it = paths_.find(std::string(id));
  if (it == paths_.end()) {
    throw LayoutError(LayoutError::Kind::unknown_key, "unknown key id '" + std::string(id) + "'");
  }
  return it->second;
}

const KeyDef& Layout::key_at(const ScanPath& path) const {
  return groups_.at(path.group).subgroups.at(path.subgroup).rows.at(path.row).at(path.key);
}

std::vector<const KeyDef*> Layout::keys() const {
  std::vector<const KeyDef*> out;
  out.reserve(paths_.size());
  for (const auto& group : groups_)
    for (const auto& sub : group.subgroups)
      for (const auto& row : sub.rows)
        for (const auto& key : row) out.push_back(&key);
  return out;
}

Layout parse_layout(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw LayoutError(LayoutError::Kind::syntax,
                      "syntax error at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }

  std::string name = require_string(doc, "name", "layout");
  std::vector<Group> groups;
  const auto& jgroups = require_array(doc, "groups", "layout");
  for (std::size_t g = 0; g < jgroups.size(); ++g) {
    std::string gw = "groups[" + std::to_string(g) + "]";
    const auto& jg = jgroups[g];
    Group group{require_string(jg, "id", gw), require_string(jg, "label", gw), {}};
    const auto& jsubs = require_array(jg, "subgroups", gw);
    for (std::size_t s = 0; s < jsubs.size(); ++s) {
      std::string sw = gw + ".subgroups[" + std::to_string(s) + "]";
      const auto& js = jsubs[s];
      Subgroup sub{require_string(js, "id", sw), require_string(js, "label", sw), {}};
      const auto& jrows = require_array(js, "rows", sw);
      for (std::size_t r = 0; r < jrows.size(); ++r) {
        std::string rw = sw + ".rows[" + std::to_string(r) + "]";
        if (!jrows[r].is_array()) throw LayoutError(LayoutError::Kind::schema, rw + ": expected an array");
        Row row;
        for (std::size_t k = 0; k < jrows[r].size(); ++k) {
          row.push_back(parse_key(jrows[r][k], rw + "[" + std::to_string(k) + "]"));
        }
        sub.rows.push_back(std::move(row));
      }
      group.subgroups.push_back(std::move(sub));
    }
    groups.push_back(std::move(group));
  }
  return Layout(std::move(name), std::move(groups));
}

std::string render_layout(const Layout& layout) {
  ordered_json doc;
  doc["name"] = layout.name();
  auto groups = ordered_json::array();
  for (const auto& group : layout.groups()) {
    ordered_json jg;
    jg["id"] = group.id;
    jg["label"] = group.label;
    auto subs = ordered_json::array();
    for (const auto& sub : group.subgroups) {
      ordered_json js;
      js["id"] = sub.id;
      js["label"] = sub.label;
      auto rows = ordered_json::array();
      for (const auto& row : sub.rows) {
        auto jrow = ordered_json::array();
        for (const auto& key : row) jrow.push_back(key_to_json(key));
        rows.push_back(std::move(jrow));
      }
      js["rows"] = std::move(rows);
      subs.push_back(std::move(js));
    }
    jg["subgroups"] = std::move(subs);
    groups.push_back(std::move(jg));
  }
  doc["groups"] = std::move(groups);
  return doc.dump(2) + "\n";
}

std::string_view default_layout_document() { return detail::kDefaultLayoutDocument; }

const Layout& default_layout() {
  static const Layout layout = parse_layout(detail::kDefaultLayoutDocument);
  return layout;
}

}  // namespace scanboard
