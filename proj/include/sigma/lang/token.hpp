#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigma/error.hpp"

namespace sigma::lang {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class TokenKind {
  Word,        // identifiers, atom bases, keywords, `0`
  Star,        // *
  LBrace,      // {
  RBrace,      // }
  LParen,      // (
  RParen,      // )
  Comma,       // ,
  Plus,        // + or ∪
  Backslash,   // \  (star difference)
  Amp,         // &  (hat intersection)
  Equals,      // =
  Terminator,  // newline or ;
  End,
};

std::string_view describe(TokenKind kind) noexcept;

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  std::size_t offset = 0;  // byte offsets into the source
  std::size_t length = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected,
             const std::string& found);
  ParseError(SourcePos pos, const std::string& message);

  SourcePos pos() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// Splits source text into tokens. Newlines inside (...) or {...} are
/// whitespace; elsewhere they terminate statements. `#` starts a comment.
std::vector<Token> tokenize(std::string_view source);

}  // namespace sigma::lang
