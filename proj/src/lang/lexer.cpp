#include <algorithm>

#include "sigma/lang/token.hpp"

namespace sigma::lang {

std::string_view describe(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "identifier";
    case TokenKind::Star: return "'*'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Backslash: return "'\\'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Terminator: return "end of statement";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

std::string located(SourcePos pos, const std::string& message) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column) + ": " + message;
}

std::string expectation(const std::vector<std::string>& expected,
                        const std::string& found) {
  std::string out = "expected ";
  if (expected.size() > 1) out += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out + " but found " + found;
}

constexpr std::string_view kUnion = "\xE2\x88\xAA";  // ∪

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected,
                       const std::string& found)
    : Error(ErrorCode::Parse, located(pos, expectation(expected, found))),
      pos_(pos),
      expected_(std::move(expected)) {}

ParseError::ParseError(SourcePos pos, const std::string& message)
    : Error(ErrorCode::Parse, located(pos, message)), pos_(pos) {}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  SourcePos pos;
  std::size_t i = 0;
  int depth = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      const auto c = static_cast<unsigned char>(src[i]);
      if (c == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++pos.column;
      }
    }
  };
  auto emit = [&](TokenKind kind, std::size_t len) {
    tokens.push_back({kind, std::string(src.substr(i, len)), pos, i, len});
    advance(len);
  };

  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      if (depth > 0) {
        advance(1);
      } else {
        emit(TokenKind::Terminator, 1);
      }
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (src.substr(i, kUnion.size()) == kUnion) {
      emit(TokenKind::Plus, kUnion.size());
      continue;
    }
    switch (c) {
      case '*': emit(TokenKind::Star, 1); continue;
      case '{': ++depth; emit(TokenKind::LBrace, 1); continue;
      case '(': ++depth; emit(TokenKind::LParen, 1); continue;
      case '}': depth = std::max(0, depth - 1); emit(TokenKind::RBrace, 1); continue;
      case ')': depth = std::max(0, depth - 1); emit(TokenKind::RParen, 1); continue;
      case ',': emit(TokenKind::Comma, 1); continue;
      case '+': emit(TokenKind::Plus, 1); continue;
      case '\\': emit(TokenKind::Backslash, 1); continue;
      case '&': emit(TokenKind::Amp, 1); continue;
      case '=': emit(TokenKind::Equals, 1); continue;
      case ';': emit(TokenKind::Terminator, 1); continue;
      default: break;
    }
    if (is_word_byte(c)) {
      std::size_t j = i;
      while (j < src.size() && is_word_byte(static_cast<unsigned char>(src[j])) &&
             src.substr(j, kUnion.size()) != kUnion) {
        ++j;
      }
      emit(TokenKind::Word, j - i);
      continue;
    }
    throw ParseError(pos, std::string("unexpected character '") +
                              static_cast<char>(c) + "'");
  }
  tokens.push_back({TokenKind::End, "", pos, src.size(), 0});
  return tokens;
}

}  // namespace sigma::lang
