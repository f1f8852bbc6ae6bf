#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace freeop {

enum class TokenKind { identifier, integer, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Splits input into identifiers, unsigned integers and one-character
/// symbols. `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with position-aware error reporting.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::end; }

  bool is_symbol(std::string_view s, std::size_t ahead = 0) const;
  bool is_identifier(std::string_view s, std::size_t ahead = 0) const;
  bool accept_symbol(std::string_view s);
  bool accept_identifier(std::string_view s);
  const Token& expect_symbol(std::string_view s);
  const Token& expect_identifier();
  const Token& expect_integer();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace freeop
