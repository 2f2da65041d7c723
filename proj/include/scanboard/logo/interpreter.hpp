#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scanboard/logo/lexer.hpp"

namespace scanboard::logo {

struct Value;
using List = std::vector<Value>;

/// Runtime datum: a finite number, a word, or a list.
struct Value {
  std::variant<double, std::string, List> data;

  Value() : data(0.0) {}
  Value(double n) : data(n) {}
  Value(std::string w) : data(std::move(w)) {}
  Value(List l) : data(std::move(l)) {}

  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_word() const { return std::holds_alternative<std::string>(data); }
  bool is_list() const { return std::holds_alternative<List>(data); }

  bool operator==(const Value&) const = default;
};

/// Printed form; lists keep their brackets only when nested or `show`n.
std::string format_value(const Value& value, bool outer_brackets = false);

struct Procedure {
  std::string name;
  std::vector<std::string> params;
  std::vector<Token> body;
};

struct Segment {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool operator==(const Segment&) const = default;
};

struct TurtleState {
  double x = 0.0;
  double y = 0.0;
  /// Degrees in [0, 360); 0 is north, clockwise positive.
  double heading = 0.0;
  bool pen_down = true;
  bool visible = true;
  std::vector<Segment> segments;
};

struct Environment {
  std::map<std::string, Value> variables;
  std::map<std::string, Procedure> procedures;
  TurtleState turtle;
  std::vector<std::string> output_log;
};

struct RunReport {
  /// Segments drawn by this run that are still on screen.
  std::vector<Segment> segments;
  std::vector<std::string> printed;
  /// The run cleared the screen (cs) at least once.
  bool cleared = false;
  /// First error; instructions before it keep their effects.
  std::optional<LogoError> error;

  bool ok() const { return !error.has_value(); }
};

/// Tokenizes, parses and evaluates `source` against `env`. Never throws for
/// Logo-level errors; they are reported in RunReport::error.
RunReport run(std::string_view source, Environment& env);

/// Throws LogoError(builtin_collision) when the name is a primitive.
void define(Environment& env, Procedure proc);

bool is_builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Maximum depth of nested user-procedure calls.
inline constexpr int kMaxCallDepth = 10000;
/// Maximum nesting of list literals such as `[[[1]]]`.
inline constexpr int kMaxListDepth = 1000;

}  // namespace scanboard::logo
