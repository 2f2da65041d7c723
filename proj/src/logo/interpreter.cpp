#include "scanboard/logo/interpreter.hpp"

#include <pthread.h>

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <numbers>
#include <span>
#include <utility>

namespace scanboard::logo {

namespace {

struct StopSignal {};
struct OutputSignal {
  Value value;
};

using Args = std::vector<Value>;
class Evaluator;

struct Primitive {
  int arity;
  std::optional<Value> (*fn)(Evaluator&, Args&);
};

const std::map<std::string, Primitive, std::less<>>& primitives();

/// Read position over a token sequence.
class Cursor {
 public:
  explicit Cursor(std::span<const Token> tokens) : tokens_(tokens) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  void skip_newlines() {
    while (!done() && peek().kind == TokenKind::newline) ++pos_;
  }
  bool at_op(char op) const {
    return !done() && peek().kind == TokenKind::op && peek().text[0] == op;
  }
  /// True when no further input expression can start here.
  bool at_input_end() {
    skip_newlines();
    return done() || peek().kind == TokenKind::close_bracket ||
           peek().kind == TokenKind::close_paren;
  }

 private:
  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

double check_finite(double v, std::string_view what) {
  if (!std::isfinite(v)) {
    throw LogoError(ErrorCode::invalid_number, std::string(what) + " produced a non-finite number");
  }
  return v;
}

double normalize_heading(double h) {
  h = std::fmod(h, 360.0);
  if (h < 0) h += 360.0;
  if (h >= 360.0) h = 0.0;
  return h;
}

// Exact at multiples of 90 degrees so axis-aligned drawings stay on grid.
std::pair<double, double> sin_cos_degrees(double degrees) {
  double q = degrees / 90.0;
  if (q == std::floor(q)) {
    switch (static_cast<long long>(q) % 4) {
      case 0: return {0.0, 1.0};
      case 1: return {1.0, 0.0};
      case 2: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  double rad = degrees * std::numbers::pi / 180.0;
  return {std::sin(rad), std::cos(rad)};
}

// Programs run on a thread with this much stack so that kMaxCallDepth nested
// calls fit. Pages are only committed as they are touched.
constexpr std::size_t kRunStackBytes = std::size_t{512} << 20;
// Stack kept free below the guard for primitives and exception unwinding.
constexpr std::size_t kStackReserveBytes = std::size_t{2} << 20;
// Budget when the dedicated thread cannot be created and the program runs on
// the caller's stack instead.
constexpr std::size_t kFallbackStackBytes = std::size_t{4} << 20;

class Evaluator {
 public:
  Evaluator(Environment& env, RunReport& report, std::size_t stack_budget)
      : env_(env),
        report_(report),
        segment_start_(env.turtle.segments.size()),
        stack_top_(reinterpret_cast<std::uintptr_t>(&stack_budget)),
        stack_budget_(stack_budget) {}

  void run_block(std::span<const Token> tokens) {
    check_stack();
    Cursor c(tokens);
    for (;;) {
      c.skip_newlines();
      if (c.done()) return;
      instruction(c);
    }
  }

  void run_list(const List& list) {
    auto tokens = list_tokens(list);
    run_block(tokens);
  }

  std::vector<Token> list_tokens(const List& list) const {
    std::string source;
    for (const auto& item : list) {
      if (!source.empty()) source.push_back(' ');
      source += format_value(item, true);
    }
    return tokenize(source);
  }

  void finish() {
    const auto& segs = env_.turtle.segments;
    if (segment_start_ > segs.size()) segment_start_ = segs.size();
    report_.segments.assign(segs.begin() + static_cast<std::ptrdiff_t>(segment_start_), segs.end());
  }

  // Primitive support.

  Environment& env() { return env_; }
  bool in_procedure() const { return !frames_.empty(); }

  double number(const Value& v, std::string_view who) const {
    if (!v.is_number()) {
      throw LogoError(ErrorCode::type_error,
                      std::string(who) + " doesn't like " + format_value(v, true) + " as input");
    }
    return std::get<double>(v.data);
  }

  const List& list(const Value& v, std::string_view who) const {
    if (!v.is_list()) {
      throw LogoError(ErrorCode::type_error,
                      std::string(who) + " doesn't like " + format_value(v, true) + " as input");
    }
    return std::get<List>(v.data);
  }

  const std::string& word(const Value& v, std::string_view who) const {
    if (!v.is_word()) {
      throw LogoError(ErrorCode::type_error,
                      std::string(who) + " doesn't like " + format_value(v, true) + " as input");
    }
    return std::get<std::string>(v.data);
  }

  bool condition(const Value& v, std::string_view who) const {
    if (v.is_word()) {
      const auto& w = std::get<std::string>(v.data);
      if (w == "true") return true;
      if (w == "false") return false;
    }
    throw LogoError(ErrorCode::type_error,
                    std::string(who) + " doesn't like " + format_value(v, true) + " as input");
  }

  void print_line(std::string line) {
    env_.output_log.push_back(line);
    report_.printed.push_back(std::move(line));
  }

  void move(double distance) {
    auto& t = env_.turtle;
    auto [s, c] = sin_cos_degrees(t.heading);
    double nx = check_finite(t.x + distance * s, "forward");
    double ny = check_finite(t.y + distance * c, "forward");
    if (t.pen_down) t.segments.push_back(Segment{t.x, t.y, nx, ny});
    t.x = nx;
    t.y = ny;
  }

  void set_heading(double h) { env_.turtle.heading = normalize_heading(h); }

  void clear_screen() {
    env_.turtle = TurtleState{};
    segment_start_ = 0;
    report_.cleared = true;
  }

  Value lookup(const std::string& name) const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) return found->second;
    }
    if (auto found = env_.variables.find(name); found != env_.variables.end()) return found->second;
    throw LogoError(ErrorCode::unbound_variable, name + " has no value");
  }

  void assign(const std::string& name, Value value) {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) {
        found->second = std::move(value);
        return;
      }
    }
    env_.variables[name] = std::move(value);
  }

 private:
  void instruction(Cursor& c) {
    const Token& t = c.peek();
    if (t.kind == TokenKind::word && t.text == "to") {
      define_from(c);
      return;
    }
    auto v = expression(c);
    if (v) {
      throw LogoError(ErrorCode::unused_value,
                      "You don't say what to do with " + format_value(*v, true));
    }
  }

  void define_from(Cursor& c) {
    c.next();  // to
    if (c.done() || c.peek().kind != TokenKind::word) {
      throw LogoError(ErrorCode::unexpected_token, "to needs a procedure name");
    }
    Procedure proc;
    proc.name = c.next().text;
    while (!c.done() && c.peek().kind == TokenKind::thing_ref) proc.params.push_back(c.next().text);
    for (;;) {
      if (c.done()) {
        throw LogoError(ErrorCode::unterminated_procedure,
                        "procedure " + proc.name + " has no end");
      }
      const Token& t = c.next();
      if (t.kind == TokenKind::word && t.text == "end") break;
      proc.body.push_back(t);
    }
    define(env_, std::move(proc));
  }

  Value require(std::optional<Value> v, std::string_view who, std::string_view to) {
    if (!v) {
      throw LogoError(ErrorCode::no_output, std::string(who) + " didn't output to " + std::string(to));
    }
    return std::move(*v);
  }

  Value operand(Cursor& c, char op, std::optional<Value> (Evaluator::*level)(Cursor&)) {
    if (c.at_input_end()) {
      throw LogoError(ErrorCode::wrong_arity, std::string("not enough inputs to ") + op);
    }
    return require((this->*level)(c), "expression", std::string(1, op));
  }

  std::optional<Value> expression(Cursor& c) { return comparison(c); }

  std::optional<Value> comparison(Cursor& c) {
    auto lhs = additive(c);
    while (c.at_op('<') || c.at_op('>') || c.at_op('=')) {
      char op = c.next().text[0];
      Value left = require(std::move(lhs), "expression", std::string(1, op));
      Value right = operand(c, op, &Evaluator::additive);
      bool result = false;
      if (op == '=') {
        if (left.is_number() && right.is_number()) {
          result = std::get<double>(left.data) == std::get<double>(right.data);
        } else {
          result = left == right;
        }
      } else {
        double a = number(left, std::string(1, op));
        double b = number(right, std::string(1, op));
        result = op == '<' ? a < b : a > b;
      }
      lhs = Value(std::string(result ? "true" : "false"));
    }
    return lhs;
  }

  std::optional<Value> additive(Cursor& c) {
    auto lhs = multiplicative(c);
    while (c.at_op('+') || c.at_op('-')) {
      char op = c.next().text[0];
      double a = number(require(std::move(lhs), "expression", std::string(1, op)), std::string(1, op));
      double b = number(operand(c, op, &Evaluator::multiplicative), std::string(1, op));
      lhs = Value(check_finite(op == '+' ? a + b : a - b, std::string(1, op)));
    }
    return lhs;
  }

  std::optional<Value> multiplicative(Cursor& c) {
    auto lhs = unary(c);
    while (c.at_op('*') || c.at_op('/')) {
      char op = c.next().text[0];
      double a = number(require(std::move(lhs), "expression", std::string(1, op)), std::string(1, op));
      double b = number(operand(c, op, &Evaluator::unary), std::string(1, op));
      if (op == '/' && b == 0.0) throw LogoError(ErrorCode::division_by_zero, "division by zero");
      lhs = Value(check_finite(op == '*' ? a * b : a / b, std::string(1, op)));
    }
    return lhs;
  }

  std::optional<Value> unary(Cursor& c) {
    c.skip_newlines();
    if (c.at_op('-')) {
      c.next();
      double v = number(operand(c, '-', &Evaluator::unary), "-");
      return Value(-v);
    }
    return primary(c);
  }

  std::optional<Value> primary(Cursor& c) {
    check_stack();
    c.skip_newlines();
    if (c.done()) throw LogoError(ErrorCode::wrong_arity, "unexpected end of input");
    const Token& t = c.next();
    switch (t.kind) {
      case TokenKind::number: return Value(t.number);
      case TokenKind::quoted_word: return Value(t.text);
      case TokenKind::thing_ref: return lookup(t.text);
      case TokenKind::open_paren: {
        auto v = expression(c);
        c.skip_newlines();
        if (c.done() || c.peek().kind != TokenKind::close_paren) {
          throw LogoError(ErrorCode::unclosed_paren, "expected ')'", t.offset);
        }
        c.next();
        return v;
      }
      case TokenKind::open_bracket: return Value(list_literal(c, t.offset));
      case TokenKind::word: return call(t.text, c);
      case TokenKind::close_paren:
      case TokenKind::close_bracket:
      case TokenKind::op:
      case TokenKind::newline:
        break;
    }
    throw LogoError(ErrorCode::unexpected_token, "unexpected '" + token_text(t) + "'", t.offset);
  }

  List list_literal(Cursor& c, std::size_t open_offset, int depth = 1) {
    if (depth > kMaxListDepth) {
      throw LogoError(ErrorCode::recursion_limit, "lists nest too deeply", open_offset);
    }
    List items;
    for (;;) {
      if (c.done()) throw LogoError(ErrorCode::unclosed_bracket, "missing ']'", open_offset);
      const Token& t = c.next();
      switch (t.kind) {
        case TokenKind::close_bracket: return items;
        case TokenKind::open_bracket: items.emplace_back(list_literal(c, t.offset, depth + 1)); break;
        case TokenKind::newline: break;
        case TokenKind::number: items.emplace_back(t.number); break;
        default: items.emplace_back(token_text(t)); break;
      }
    }
  }

  Args inputs(Cursor& c, const std::string& name, std::size_t count) {
    Args args;
    args.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (c.at_input_end()) throw LogoError(ErrorCode::wrong_arity, "not enough inputs to " + name);
      args.push_back(require(expression(c), "expression", name));
    }
    return args;
  }

  std::optional<Value> call(const std::string& name, Cursor& c) {
    if (name == "end") throw LogoError(ErrorCode::end_without_to, "end without to");
    if (name == "to") throw LogoError(ErrorCode::unexpected_token, "to must start an instruction");

    const auto& table = primitives();
    if (auto it = table.find(name); it != table.end()) {
      Args args = inputs(c, name, static_cast<std::size_t>(it->second.arity));
      return it->second.fn(*this, args);
    }
    if (auto it = env_.procedures.find(name); it != env_.procedures.end()) {
      // Copy: the body may redefine this procedure while it runs.
      Procedure proc = it->second;
      Args args = inputs(c, name, proc.params.size());
      return invoke(proc, std::move(args));
    }
    throw LogoError(ErrorCode::unknown_word, "I don't know how to " + name);
  }

  std::optional<Value> invoke(const Procedure& proc, Args args) {
    if (frames_.size() >= static_cast<std::size_t>(kMaxCallDepth)) {
      throw LogoError(ErrorCode::recursion_limit, "too many nested calls in " + proc.name);
    }
    std::map<std::string, Value> locals;
    for (std::size_t i = 0; i < proc.params.size(); ++i) locals[proc.params[i]] = std::move(args[i]);
    frames_.push_back(std::move(locals));
    struct Pop {
      std::vector<std::map<std::string, Value>>& frames;
      ~Pop() { frames.pop_back(); }
    } pop{frames_};

    try {
      run_block(proc.body);
    } catch (const StopSignal&) {
      return std::nullopt;
    } catch (OutputSignal& out) {
      return std::move(out.value);
    }
    return std::nullopt;
  }

  // Deep nesting that is not a procedure call (parentheses, brackets, long
  // operator chains) is bounded by the stack actually in use.
  void check_stack() const {
    char here;
    auto addr = reinterpret_cast<std::uintptr_t>(&here);
    if (stack_top_ > addr && stack_top_ - addr > stack_budget_) {
      throw LogoError(ErrorCode::recursion_limit, "program nests too deeply");
    }
  }

  Environment& env_;
  RunReport& report_;
  std::size_t segment_start_;
  std::uintptr_t stack_top_;
  std::size_t stack_budget_;
  std::vector<std::map<std::string, Value>> frames_;
};

struct RunJob {
  std::string_view source;
  Environment& env;
  RunReport report;
  std::exception_ptr failure;
};

void run_job(RunJob& job, std::size_t stack_budget) {
  try {
    Evaluator ev(job.env, job.report, stack_budget);
    try {
      auto tokens = tokenize(job.source);
      ev.run_block(tokens);
    } catch (const LogoError& e) {
      job.report.error = e;
    }
    ev.finish();
  } catch (...) {
    job.failure = std::current_exception();
  }
}

extern "C" void* run_job_thread(void* arg) {
  run_job(*static_cast<RunJob*>(arg), kRunStackBytes - kStackReserveBytes);
  return nullptr;
}

// Runs the job on a large-stack thread; false if the thread could not start.
bool run_on_large_stack(RunJob& job) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) return false;
  pthread_t thread;
  bool started = pthread_attr_setstacksize(&attr, kRunStackBytes) == 0 &&
                 pthread_create(&thread, &attr, run_job_thread, &job) == 0;
  pthread_attr_destroy(&attr);
  if (started) pthread_join(thread, nullptr);
  return started;
}

// Primitives. Each receives exactly `arity` evaluated inputs.

using Result = std::optional<Value>;

Result p_forward(Evaluator& ev, Args& a) { ev.move(ev.number(a[0], "forward")); return {}; }
Result p_back(Evaluator& ev, Args& a) { ev.move(-ev.number(a[0], "back")); return {}; }
Result p_right(Evaluator& ev, Args& a) {
  ev.set_heading(ev.env().turtle.heading + ev.number(a[0], "right"));
  return {};
}
Result p_left(Evaluator& ev, Args& a) {
  ev.set_heading(ev.env().turtle.heading - ev.number(a[0], "left"));
  return {};
}
Result p_penup(Evaluator& ev, Args&) { ev.env().turtle.pen_down = false; return {}; }
Result p_pendown(Evaluator& ev, Args&) { ev.env().turtle.pen_down = true; return {}; }
Result p_clearscreen(Evaluator& ev, Args&) { ev.clear_screen(); return {}; }
Result p_home(Evaluator& ev, Args&) {
  auto& t = ev.env().turtle;
  t.x = 0;
  t.y = 0;
  t.heading = 0;
  return {};
}
Result p_setpos(Evaluator& ev, Args& a) {
  const auto& l = ev.list(a[0], "setpos");
  if (l.size() != 2) throw LogoError(ErrorCode::type_error, "setpos needs a list of two numbers");
  double x = ev.number(l[0], "setpos");
  double y = ev.number(l[1], "setpos");
  ev.env().turtle.x = x;
  ev.env().turtle.y = y;
  return {};
}
Result p_setheading(Evaluator& ev, Args& a) { ev.set_heading(ev.number(a[0], "setheading")); return {}; }
Result p_setx(Evaluator& ev, Args& a) { ev.env().turtle.x = ev.number(a[0], "setx"); return {}; }
Result p_sety(Evaluator& ev, Args& a) { ev.env().turtle.y = ev.number(a[0], "sety"); return {}; }
Result p_xcor(Evaluator& ev, Args&) { return Value(ev.env().turtle.x); }
Result p_ycor(Evaluator& ev, Args&) { return Value(ev.env().turtle.y); }
Result p_heading(Evaluator& ev, Args&) { return Value(ev.env().turtle.heading); }
Result p_hideturtle(Evaluator& ev, Args&) { ev.env().turtle.visible = false; return {}; }
Result p_showturtle(Evaluator& ev, Args&) { ev.env().turtle.visible = true; return {}; }

Result p_print(Evaluator& ev, Args& a) { ev.print_line(format_value(a[0], false)); return {}; }
Result p_show(Evaluator& ev, Args& a) { ev.print_line(format_value(a[0], true)); return {}; }

Result p_make(Evaluator& ev, Args& a) {
  ev.assign(ev.word(a[0], "make"), std::move(a[1]));
  return {};
}
Result p_thing(Evaluator& ev, Args& a) { return ev.lookup(ev.word(a[0], "thing")); }

Result p_repeat(Evaluator& ev, Args& a) {
  double n = std::floor(ev.number(a[0], "repeat"));
  auto tokens = ev.list_tokens(ev.list(a[1], "repeat"));
  for (double i = 0; i < n; ++i) ev.run_block(tokens);
  return {};
}
Result p_if(Evaluator& ev, Args& a) {
  if (ev.condition(a[0], "if")) ev.run_list(ev.list(a[1], "if"));
  return {};
}
Result p_ifelse(Evaluator& ev, Args& a) {
  const auto& yes = ev.list(a[1], "ifelse");
  const auto& no = ev.list(a[2], "ifelse");
  ev.run_list(ev.condition(a[0], "ifelse") ? yes : no);
  return {};
}
Result p_stop(Evaluator& ev, Args&) {
  if (!ev.in_procedure()) throw LogoError(ErrorCode::stop_outside_procedure, "stop outside a procedure");
  throw StopSignal{};
}
Result p_output(Evaluator& ev, Args& a) {
  if (!ev.in_procedure()) throw LogoError(ErrorCode::stop_outside_procedure, "output outside a procedure");
  throw OutputSignal{std::move(a[0])};
}

Result p_sum(Evaluator& ev, Args& a) {
  return Value(check_finite(ev.number(a[0], "sum") + ev.number(a[1], "sum"), "sum"));
}
Result p_difference(Evaluator& ev, Args& a) {
  return Value(check_finite(ev.number(a[0], "difference") - ev.number(a[1], "difference"), "difference"));
}
Result p_product(Evaluator& ev, Args& a) {
  return Value(check_finite(ev.number(a[0], "product") * ev.number(a[1], "product"), "product"));
}
Result p_quotient(Evaluator& ev, Args& a) {
  double d = ev.number(a[1], "quotient");
  if (d == 0.0) throw LogoError(ErrorCode::division_by_zero, "quotient by zero");
  return Value(check_finite(ev.number(a[0], "quotient") / d, "quotient"));
}
Result p_remainder(Evaluator& ev, Args& a) {
  double d = ev.number(a[1], "remainder");
  if (d == 0.0) throw LogoError(ErrorCode::division_by_zero, "remainder by zero");
  return Value(std::fmod(ev.number(a[0], "remainder"), d));
}
Result p_minus(Evaluator& ev, Args& a) { return Value(-ev.number(a[0], "minus")); }
Result p_sqrt(Evaluator& ev, Args& a) {
  double v = ev.number(a[0], "sqrt");
  if (v < 0) throw LogoError(ErrorCode::invalid_number, "sqrt of a negative number");
  return Value(std::sqrt(v));
}
Result p_abs(Evaluator& ev, Args& a) { return Value(std::fabs(ev.number(a[0], "abs"))); }
Result p_round(Evaluator& ev, Args& a) { return Value(std::round(ev.number(a[0], "round"))); }
Result p_int(Evaluator& ev, Args& a) { return Value(std::trunc(ev.number(a[0], "int"))); }

const std::map<std::string, Primitive, std::less<>>& primitives() {
  static const std::map<std::string, Primitive, std::less<>> table = {
      {"fd", {1, p_forward}},         {"forward", {1, p_forward}},
      {"bk", {1, p_back}},            {"back", {1, p_back}},
      {"rt", {1, p_right}},           {"right", {1, p_right}},
      {"lt", {1, p_left}},            {"left", {1, p_left}},
      {"pu", {0, p_penup}},           {"penup", {0, p_penup}},
      {"pd", {0, p_pendown}},         {"pendown", {0, p_pendown}},
      {"cs", {0, p_clearscreen}},     {"clearscreen", {0, p_clearscreen}},
      {"home", {0, p_home}},          {"setpos", {1, p_setpos}},
      {"setheading", {1, p_setheading}}, {"seth", {1, p_setheading}},
      {"setx", {1, p_setx}},          {"sety", {1, p_sety}},
      {"xcor", {0, p_xcor}},          {"ycor", {0, p_ycor}},
      {"heading", {0, p_heading}},
      {"ht", {0, p_hideturtle}},      {"hideturtle", {0, p_hideturtle}},
      {"st", {0, p_showturtle}},      {"showturtle", {0, p_showturtle}},
      {"print", {1, p_print}},        {"pr", {1, p_print}},
      {"show", {1, p_show}},
      {"make", {2, p_make}},          {"thing", {1, p_thing}},
      {"repeat", {2, p_repeat}},      {"if", {2, p_if}},
      {"ifelse", {3, p_ifelse}},      {"stop", {0, p_stop}},
      {"output", {1, p_output}},      {"op", {1, p_output}},
      {"sum", {2, p_sum}},            {"difference", {2, p_difference}},
      {"product", {2, p_product}},    {"quotient", {2, p_quotient}},
      {"remainder", {2, p_remainder}}, {"minus", {1, p_minus}},
      {"sqrt", {1, p_sqrt}},          {"abs", {1, p_abs}},
      {"round", {1, p_round}},        {"int", {1, p_int}},
  };
  return table;
}

}  // namespace

std::string format_value(const Value& value, bool outer_brackets) {
  if (const auto* n = std::get_if<double>(&value.data)) return format_number(*n);
  if (const auto* w = std::get_if<std::string>(&value.data)) return *w;
  const auto& list = std::get<List>(value.data);
  std::string out = outer_brackets ? "[" : "";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += format_value(list[i], true);
  }
  if (outer_brackets) out.push_back(']');
  return out;
}

bool is_builtin(std::string_view name) {
  return name == "to" || name == "end" || primitives().contains(name);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"end", "to"};
  for (const auto& [name, prim] : primitives()) names.push_back(name);
  return names;
}

void define(Environment& env, Procedure proc) {
  if (is_builtin(proc.name)) {
    throw LogoError(ErrorCode::builtin_collision, proc.name + " is already defined as a primitive");
  }
  auto name = proc.name;
  env.procedures.insert_or_assign(std::move(name), std::move(proc));
}

RunReport run(std::string_view source, Environment& env) {
  RunJob job{source, env, {}, nullptr};
  if (!run_on_large_stack(job)) run_job(job, kFallbackStackBytes - kStackReserveBytes);
  if (job.failure) std::rethrow_exception(job.failure);
  return std::move(job.report);
}

}  // namespace scanboard::logo
