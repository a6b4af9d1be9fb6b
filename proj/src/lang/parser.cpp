#include "sigma/lang/parser.hpp"

#include <initializer_list>

namespace sigma::lang {

namespace {

bool starts_like_identifier(std::string_view word) {
  if (word.empty()) return false;
  const auto c = static_cast<unsigned char>(word.front());
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_check_keyword(std::string_view w) {
  return w == "assoc" || w == "localassoc" || w == "group" || w == "af";
}

CheckKind check_kind(std::string_view w) {
  if (w == "assoc") return CheckKind::Assoc;
  if (w == "localassoc") return CheckKind::LocalAssoc;
  if (w == "group") return CheckKind::Group;
  return CheckKind::AntielementFree;
}

const std::vector<std::string> kOperandStart = {"identifier", "'{'", "'0'",
                                                "'('", "'anti'"};

class Parser {
 public:
  explicit Parser(std::string_view source)
      : source_(source), tokens_(tokenize(source)) {}

  std::vector<Statement> program() {
    std::vector<Statement> out;
    for (;;) {
      while (at(TokenKind::Terminator)) ++index_;
      if (at(TokenKind::End)) break;
      const Token& first = peek();
      Statement stmt = statement();
      const Token& last = tokens_[index_ - 1];
      stmt.pos = first.pos;
      stmt.source = std::string(
          source_.substr(first.offset, last.offset + last.length - first.offset));
      expect_statement_end();
      out.push_back(std::move(stmt));
    }
    return out;
  }

  ExprPtr lone_expression() {
    while (at(TokenKind::Terminator)) ++index_;
    ExprPtr e = expr();
    while (at(TokenKind::Terminator)) ++index_;
    if (!at(TokenKind::End)) fail({"'+'", "'\\'", "'&'", "end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view text) const {
    return at(TokenKind::Word) && peek().text == text;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::Word
                                  ? "'" + t.text + "'"
                                  : std::string(describe(t.kind));
    throw ParseError(t.pos, std::move(expected), found);
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail({std::string(describe(kind))});
    return tokens_[index_++];
  }

  void expect_word(std::string_view text) {
    if (!at_word(text)) fail({"'" + std::string(text) + "'"});
    ++index_;
  }

  std::string expect_identifier() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !starts_like_identifier(t.text)) {
      fail({"identifier"});
    }
    if (is_reserved_word(t.text)) {
      throw ParseError(t.pos, "'" + t.text + "' is a reserved word");
    }
    ++index_;
    return t.text;
  }

  void expect_statement_end() {
    if (at(TokenKind::Terminator) || at(TokenKind::End)) return;
    if (at(TokenKind::Star)) {
      throw ParseError(peek().pos,
                       "postfix '*' is only valid on atoms inside a set "
                       "literal; use anti(...) for the antiset");
    }
    fail({"'+'", "'\\'", "'&'", "end of statement"});
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind == TokenKind::Word) {
      if (t.text == "solve") return solve();
      if (is_check_keyword(t.text)) return check();
      if (peek(1).kind == TokenKind::Equals) {
        if (is_reserved_word(t.text)) {
          throw ParseError(t.pos, "cannot bind to reserved word '" + t.text + "'");
        }
        std::string name = expect_identifier();
        ++index_;  // '='
        return Statement{Binding{std::move(name), expr()}, {}, {}};
      }
    }
    return Statement{ExprStatement{expr()}, {}, {}};
  }

  Statement solve() {
    expect_word("solve");
    std::string var = expect_identifier();
    expect_word("in");
    ExprPtr lhs = expr();
    expect(TokenKind::Equals);
    ExprPtr rhs = expr();
    return Statement{SolveStatement{std::move(var), std::move(lhs), std::move(rhs)},
                     {}, {}};
  }

  Statement check() {
    const CheckKind kind = check_kind(peek().text);
    ++index_;
    expect(TokenKind::LParen);
    CheckStatement stmt{kind, {}};
    const bool ternary = kind == CheckKind::Assoc || kind == CheckKind::LocalAssoc;
    stmt.args.push_back(expr());
    for (;;) {
      if (ternary && stmt.args.size() == 3) break;
      if (ternary) {
        expect(TokenKind::Comma);
      } else if (at(TokenKind::Comma)) {
        ++index_;
      } else {
        break;
      }
      stmt.args.push_back(expr());
    }
    if (!at(TokenKind::RParen)) {
      if (ternary) fail({"')'"});
      fail({"','", "')'"});
    }
    ++index_;
    return Statement{std::move(stmt), {}, {}};
  }

  ExprPtr binary_chain(BinaryOp op, TokenKind token, ExprPtr (Parser::*next)()) {
    ExprPtr lhs = (this->*next)();
    while (at(token)) {
      const SourcePos pos = peek().pos;
      ++index_;
      ExprPtr rhs = (this->*next)();
      lhs = std::make_unique<Expr>(
          Expr{BinaryExpr{op, std::move(lhs), std::move(rhs)}, pos});
    }
    return lhs;
  }

  ExprPtr expr() { return binary_chain(BinaryOp::Fuse, TokenKind::Plus, &Parser::diff); }
  ExprPtr diff() {
    return binary_chain(BinaryOp::StarDiff, TokenKind::Backslash, &Parser::hat);
  }
  ExprPtr hat() {
    return binary_chain(BinaryOp::HatIntersect, TokenKind::Amp, &Parser::unary);
  }

  ExprPtr unary() {
    if (at_word("anti")) {
      const SourcePos pos = peek().pos;
      ++index_;
      expect(TokenKind::LParen);
      ExprPtr inner = expr();
      expect(TokenKind::RParen);
      return std::make_unique<Expr>(Expr{AntiExpr{std::move(inner)}, pos});
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LBrace:
        return set_literal();
      case TokenKind::LParen: {
        ++index_;
        ExprPtr inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::Word:
        if (t.text == "0") {
          ++index_;
          return std::make_unique<Expr>(Expr{SetLiteral{}, t.pos});
        }
        if (starts_like_identifier(t.text) && !is_reserved_word(t.text)) {
          ++index_;
          return std::make_unique<Expr>(Expr{VarRef{t.text}, t.pos});
        }
        break;
      default:
        break;
    }
    fail(kOperandStart);
  }

  ExprPtr set_literal() {
    const SourcePos pos = expect(TokenKind::LBrace).pos;
    SetLiteral lit;
    if (!at(TokenKind::RBrace)) {
      for (;;) {
        if (!at(TokenKind::Word)) fail({"atom"});
        std::string base = tokens_[index_++].text;
        Polarity polarity = Polarity::Plain;
        if (at(TokenKind::Star)) {
          ++index_;
          polarity = Polarity::Anti;
        }
        lit.atoms.emplace_back(std::move(base), polarity);
        if (at(TokenKind::Comma)) {
          ++index_;
          continue;
        }
        if (at(TokenKind::RBrace)) break;
        fail({"','", "'*'", "'}'"});
      }
    }
    ++index_;  // '}'
    return std::make_unique<Expr>(Expr{std::move(lit), pos});
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

std::vector<Statement> parse(std::string_view source) {
  return Parser(source).program();
}

ExprPtr parse_expression(std::string_view source) {
  return Parser(source).lone_expression();
}

}  // namespace sigma::lang
