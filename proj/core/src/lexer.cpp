#include "freeop/lexer.hpp"

#include "freeop/errors.hpp"

#include <cctype>

namespace freeop {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    std::size_t len = 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_')) {
        ++len;
      }
      tok.kind = TokenKind::identifier;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      tok.kind = TokenKind::integer;
    } else if (std::string_view("+-*/^()[]{},;=:").find(c) != std::string_view::npos) {
      tok.kind = TokenKind::symbol;
    } else {
      throw ParseError("unexpected character", line, column, std::string(1, c));
    }
    tok.text = std::string(text.substr(i, len));
    out.push_back(std::move(tok));
    advance(len);
  }
  Token end;
  end.kind = TokenKind::end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

TokenStream::TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != TokenKind::end) tokens_.push_back(Token{});
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::is_symbol(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::symbol && t.text == s;
}

bool TokenStream::is_identifier(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::identifier && t.text == s;
}

bool TokenStream::accept_symbol(std::string_view s) {
  if (!is_symbol(s)) return false;
  next();
  return true;
}

bool TokenStream::accept_identifier(std::string_view s) {
  if (!is_identifier(s)) return false;
  next();
  return true;
}

const Token& TokenStream::expect_symbol(std::string_view s) {
  if (!is_symbol(s)) fail("expected '" + std::string(s) + "'");
  return next();
}

const Token& TokenStream::expect_identifier() {
  if (peek().kind != TokenKind::identifier) fail("expected identifier");
  return next();
}

const Token& TokenStream::expect_integer() {
  if (peek().kind != TokenKind::integer) fail("expected integer");
  return next();
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& token, const std::string& message) const {
  throw ParseError(message, token.line, token.column, token.kind == TokenKind::end ? "end of input" : token.text);
}

}  // namespace freeop
