#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scanboard::logo {

enum class ErrorCode {
  stray_character,
  bad_quote,
  unknown_word,
  wrong_arity,
  unbound_variable,
  end_without_to,
  unterminated_procedure,
  unclosed_bracket,
  unclosed_paren,
  unexpected_token,
  division_by_zero,
  invalid_number,
  type_error,
  builtin_collision,
  stop_outside_procedure,
  unused_value,
  no_output,
  recursion_limit,
};

std::string_view to_string(ErrorCode code);

class LogoError : public std::runtime_error {
 public:
  LogoError(ErrorCode code, const std::string& message,
            std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

enum class TokenKind {
  word,
  quoted_word,
  thing_ref,
  number,
  open_paren,
  close_paren,
  open_bracket,
  close_bracket,
  op,
  newline,
};

struct Token {
  TokenKind kind = TokenKind::word;
  /// Lowercased payload for words, the operator character for `op`.
  std::string text;
  double number = 0.0;
  /// Byte offset in the source; not part of equality.
  std::size_t offset = 0;

  bool operator==(const Token& other) const {
    return kind == other.kind && text == other.text && number == other.number;
  }
};

Token make_word(std::string text);
Token make_quoted(std::string text);
Token make_thing(std::string text);
Token make_number(double value);
Token make_op(char op);
Token make_punct(TokenKind kind);

/// Lexes Logo source. Words are runs of letters (and '_'); a digit ends a
/// word and a letter ends a number, so `"n4` lexes as `"n` followed by `4`.
/// Throws LogoError with the byte offset on a stray character or a `"`/`:`
/// not followed by a word.
std::vector<Token> tokenize(std::string_view source);

/// Source text of one token (`"x`, `:x`, `30`, `[` ...).
std::string token_text(const Token& token);

/// Tokens joined by single spaces; re-tokenizes to an equal list.
std::string render_tokens(const std::vector<Token>& tokens);

/// Shortest decimal form without exponent; integral values have no point.
std::string format_number(double value);

/// True when `before` immediately followed by `after` would lex as a single
/// token, i.e. a space between them is significant.
bool joins_token(char before, char after);

bool is_word_char(char c);

}  // namespace scanboard::logo
