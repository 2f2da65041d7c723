#include <gtest/gtest.h>

#include <random>

#include "scanboard/logo/lexer.hpp"

using namespace scanboard::logo;

namespace {

Token punct(TokenKind k) { return make_punct(k); }

std::vector<Token> random_tokens(std::mt19937_64& rng) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
  static const std::string ops = "+-*/<>=";
  auto rand = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto name = [&] {
    std::string s;
    int n = rand(1, 8);
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(std::tolower(letters[rand(0, 52)])));
    return s;
  };

  std::vector<Token> tokens;
  int count = rand(0, 30);
  for (int i = 0; i < count; ++i) {
    switch (rand(0, 9)) {
      case 0: tokens.push_back(make_word(name())); break;
      case 1: tokens.push_back(make_quoted(name())); break;
      case 2: tokens.push_back(make_thing(name())); break;
      case 3: tokens.push_back(make_number(rand(0, 100000))); break;
      case 4: tokens.push_back(make_number(rand(0, 100000) / 64.0)); break;
      case 5: tokens.push_back(punct(rand(0, 1) ? TokenKind::open_paren : TokenKind::close_paren)); break;
      case 6: tokens.push_back(punct(rand(0, 1) ? TokenKind::open_bracket : TokenKind::close_bracket)); break;
      case 7: tokens.push_back(make_op(ops[rand(0, 6)])); break;
      case 8: tokens.push_back(punct(TokenKind::newline)); break;
      default: tokens.push_back(make_word(name())); break;
    }
  }
  return tokens;
}

}  // namespace

TEST(Tokenize, QuotedWord) {
  EXPECT_EQ(tokenize("make \"n 4"),
            (std::vector<Token>{make_word("make"), make_quoted("n"), make_number(4)}));
}

TEST(Tokenize, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, RepeatWithParens) {
  EXPECT_EQ(tokenize("repeat (:n) [fd 30 rt 90]"),
            (std::vector<Token>{make_word("repeat"), punct(TokenKind::open_paren), make_thing("n"),
                                punct(TokenKind::close_paren), punct(TokenKind::open_bracket),
                                make_word("fd"), make_number(30), make_word("rt"), make_number(90),
                                punct(TokenKind::close_bracket)}));
}

TEST(Tokenize, LowercasesAndTracksNewlines) {
  auto tokens = tokenize("FD 10\nRT 90");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0], make_word("fd"));
  EXPECT_EQ(tokens[2].kind, TokenKind::newline);
  EXPECT_EQ(tokens[2].offset, 5u);
  EXPECT_EQ(tokens[3], make_word("rt"));
}

TEST(Tokenize, LettersAndDigitsSplit) {
  EXPECT_EQ(tokenize("\"n4"), (std::vector<Token>{make_quoted("n"), make_number(4)}));
  EXPECT_EQ(tokenize("30rt"), (std::vector<Token>{make_number(30), make_word("rt")}));
  EXPECT_EQ(tokenize("2.5"), (std::vector<Token>{make_number(2.5)}));
  EXPECT_EQ(tokenize("2+3*4"),
            (std::vector<Token>{make_number(2), make_op('+'), make_number(3), make_op('*'), make_number(4)}));
}

TEST(Tokenize, StrayCharacter) {
  try {
    tokenize("fd 10 @");
    FAIL();
  } catch (const LogoError& e) {
    EXPECT_EQ(e.code(), ErrorCode::stray_character);
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Tokenize, QuoteOrColonWithoutName) {
  for (const char* src : {"make \" 4", "print :", ":(", "\"3"}) {
    try {
      tokenize(src);
      ADD_FAILURE() << src;
    } catch (const LogoError& e) {
      EXPECT_EQ(e.code(), ErrorCode::bad_quote) << src;
    }
  }
}

TEST(Tokenize, JoinsTokenAgreesWithLexer) {
  const std::string chars = "ab_Z09.\"+-*/<>=()[]:";
  for (char a : chars) {
    for (char b : chars) {
      std::string together{a, b};
      std::string apart{a, ' ', b};
      std::vector<Token> t1, t2;
      try {
        t1 = tokenize(together);
        t2 = tokenize(apart);
      } catch (const LogoError&) {
        continue;
      }
      EXPECT_EQ(joins_token(a, b), t1 != t2) << '"' << together << '"';
    }
  }
}

TEST(FormatNumber, CanonicalForms) {
  EXPECT_EQ(format_number(14), "14");
  EXPECT_EQ(format_number(3.5), "3.5");
  EXPECT_EQ(format_number(-2), "-2");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e21), "1000000000000000000000");
}

TEST(Tokenize, RenderRoundTripProperty) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    auto tokens = random_tokens(rng);
    EXPECT_EQ(tokenize(render_tokens(tokens)), tokens) << render_tokens(tokens);
  }
}
