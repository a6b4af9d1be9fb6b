#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigma/core.hpp"
#include "sigma/lang/token.hpp"

namespace sigma::lang {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinaryOp { Fuse, HatIntersect, StarDiff };

struct SetLiteral {
  std::vector<Atom> atoms;  // as written; canonicalized on evaluation
};

struct VarRef {
  std::string name;
};

struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct AntiExpr {
  ExprPtr inner;
};

struct Expr {
  std::variant<SetLiteral, VarRef, BinaryExpr, AntiExpr> node;
  SourcePos pos;
};

/// Fixture-friendly rendering, e.g. `Fuse(Var(A),Anti(Set{1,2}))`.
std::string dump(const Expr& expr);

/// Operands of the outermost left-nested fusion spine: `A + B + C` yields
/// [A, B, C]; a non-fusion expression yields itself.
std::vector<const Expr*> fusion_operands(const Expr& expr);

enum class CheckKind { Assoc, LocalAssoc, Group, AntielementFree };

std::string_view to_string(CheckKind kind) noexcept;

struct Binding {
  std::string name;
  ExprPtr value;
};

struct ExprStatement {
  ExprPtr value;
};

struct SolveStatement {
  std::string variable;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct CheckStatement {
  CheckKind kind;
  std::vector<ExprPtr> args;
};

struct Statement {
  std::variant<Binding, ExprStatement, SolveStatement, CheckStatement> node;
  std::string source;  // statement text as written
  SourcePos pos;
};

bool is_reserved_word(std::string_view word) noexcept;

}  // namespace sigma::lang
