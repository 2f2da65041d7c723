#include "scanboard/logo/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace scanboard::logo {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_operator(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '<': case '>': case '=':
      return true;
    default:
      return false;
  }
}

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::stray_character: return "stray_character";
    case ErrorCode::bad_quote: return "bad_quote";
    case ErrorCode::unknown_word: return "unknown_word";
    case ErrorCode::wrong_arity: return "wrong_arity";
    case ErrorCode::unbound_variable: return "unbound_variable";
    case ErrorCode::end_without_to: return "end_without_to";
    case ErrorCode::unterminated_procedure: return "unterminated_procedure";
    case ErrorCode::unclosed_bracket: return "unclosed_bracket";
    case ErrorCode::unclosed_paren: return "unclosed_paren";
    case ErrorCode::unexpected_token: return "unexpected_token";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::invalid_number: return "invalid_number";
    case ErrorCode::type_error: return "type_error";
    case ErrorCode::builtin_collision: return "builtin_collision";
    case ErrorCode::stop_outside_procedure: return "stop_outside_procedure";
    case ErrorCode::unused_value: return "unused_value";
    case ErrorCode::no_output: return "no_output";
    case ErrorCode::recursion_limit: return "recursion_limit";
  }
  return "unknown";
}

bool is_word_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool joins_token(char before, char after) {
  if (is_word_char(before) && is_word_char(after)) return true;
  if (is_digit(before) && (is_digit(after) || after == '.')) return true;
  if (before == '.' && is_digit(after)) return true;
  return false;
}

Token make_word(std::string text) { return Token{TokenKind::word, std::move(text), 0.0, 0}; }
Token make_quoted(std::string text) { return Token{TokenKind::quoted_word, std::move(text), 0.0, 0}; }
Token make_thing(std::string text) { return Token{TokenKind::thing_ref, std::move(text), 0.0, 0}; }
Token make_number(double value) { return Token{TokenKind::number, {}, value, 0}; }
Token make_op(char op) { return Token{TokenKind::op, std::string(1, op), 0.0, 0}; }
Token make_punct(TokenKind kind) { return Token{kind, {}, 0.0, 0}; }

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto read_word = [&](std::size_t start) {
    std::string word;
    std::size_t j = start;
    while (j < n && is_word_char(source[j])) word.push_back(lower(source[j++]));
    return std::pair{std::move(word), j};
  };

  while (i < n) {
    const char c = source[i];
    const std::size_t start = i;
    if (c == '\n') {
      Token t = make_punct(TokenKind::newline);
      t.offset = start;
      tokens.push_back(std::move(t));
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }

    Token token;
    if (is_word_char(c)) {
      auto [word, next] = read_word(i);
      token = make_word(std::move(word));
      i = next;
    } else if (c == '"' || c == ':') {
      auto [word, next] = read_word(i + 1);
      if (word.empty()) {
        throw LogoError(ErrorCode::bad_quote,
                        std::string("'") + c + "' must be followed by a name at offset " +
                            std::to_string(start),
                        start);
      }
      token = c == '"' ? make_quoted(std::move(word)) : make_thing(std::move(word));
      i = next;
    } else if (is_digit(c)) {
      std::size_t j = i;
      while (j < n && is_digit(source[j])) ++j;
      if (j < n && source[j] == '.') {
        ++j;
        while (j < n && is_digit(source[j])) ++j;
      }
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(source.data() + i, source.data() + j, value);
      if (ec != std::errc() || !std::isfinite(value)) {
        throw LogoError(ErrorCode::invalid_number,
                        "number out of range at offset " + std::to_string(start), start);
      }
      (void)ptr;
      token = make_number(value);
      i = j;
    } else if (is_operator(c)) {
      token = make_op(c);
      ++i;
    } else if (c == '(' || c == ')' || c == '[' || c == ']') {
      token = make_punct(c == '(' ? TokenKind::open_paren
                         : c == ')' ? TokenKind::close_paren
                         : c == '[' ? TokenKind::open_bracket
                                    : TokenKind::close_bracket);
      ++i;
    } else {
      throw LogoError(ErrorCode::stray_character,
                      std::string("stray character '") + c + "' at offset " + std::to_string(start),
                      start);
    }
    token.offset = start;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 512> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc()) return "0";
  return std::string(buf.data(), end);
}

std::string token_text(const Token& token) {
  switch (token.kind) {
    case TokenKind::word: return token.text;
    case TokenKind::quoted_word: return "\"" + token.text;
    case TokenKind::thing_ref: return ":" + token.text;
    case TokenKind::number: return format_number(token.number);
    case TokenKind::open_paren: return "(";
    case TokenKind::close_paren: return ")";
    case TokenKind::open_bracket: return "[";
    case TokenKind::close_bracket: return "]";
    case TokenKind::op: return token.text;
    case TokenKind::newline: return "\n";
  }
  return {};
}

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += token_text(tokens[i]);
  }
  return out;
}

}  // namespace scanboard::logo
