#include "sigma/lang/ast.hpp"

#include <array>

namespace sigma::lang {

namespace {

struct Dumper {
  std::string operator()(const SetLiteral& s) const {
    std::string out = "Set{";
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
      if (i) out += ',';
      out += s.atoms[i].to_string();
    }
    return out + '}';
  }
  std::string operator()(const VarRef& v) const { return "Var(" + v.name + ")"; }
  std::string operator()(const BinaryExpr& b) const {
    const char* name = b.op == BinaryOp::Fuse           ? "Fuse"
                       : b.op == BinaryOp::HatIntersect ? "HatIntersect"
                                                        : "StarDiff";
    return std::string(name) + "(" + dump(*b.lhs) + "," + dump(*b.rhs) + ")";
  }
  std::string operator()(const AntiExpr& a) const {
    return "Anti(" + dump(*a.inner) + ")";
  }
};

}  // namespace

std::string dump(const Expr& expr) { return std::visit(Dumper{}, expr.node); }

std::vector<const Expr*> fusion_operands(const Expr& expr) {
  std::vector<const Expr*> reversed;
  const Expr* cur = &expr;
  while (const auto* b = std::get_if<BinaryExpr>(&cur->node)) {
    if (b->op != BinaryOp::Fuse) break;
    reversed.push_back(b->rhs.get());
    cur = b->lhs.get();
  }
  reversed.push_back(cur);
  return {reversed.rbegin(), reversed.rend()};
}

std::string_view to_string(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::Assoc: return "assoc";
    case CheckKind::LocalAssoc: return "localassoc";
    case CheckKind::Group: return "group";
    case CheckKind::AntielementFree: return "af";
  }
  return "?";
}

bool is_reserved_word(std::string_view word) noexcept {
  static constexpr std::array<std::string_view, 7> kReserved = {
      "solve", "in", "anti", "assoc", "localassoc", "group", "af"};
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

}  // namespace sigma::lang
