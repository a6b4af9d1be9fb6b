#include "sigma/lang/evaluator.hpp"

#include "sigma/error.hpp"
#include "sigma/lang/format.hpp"

namespace sigma::lang {

namespace {

std::string at(SourcePos pos) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column) + ": ";
}

class ExprEvaluator {
 public:
  ExprEvaluator(const Environment& env, const EvalOptions& options,
                std::vector<std::string>* warnings)
      : env_(env), options_(options), warnings_(warnings) {}

  SigmaSet operator()(const Expr& e) const {
    return std::visit([&](const auto& node) { return eval(node, e); }, e.node);
  }

 private:
  SigmaSet eval(const SetLiteral& lit, const Expr&) const {
    return SigmaSet::from_atoms(lit.atoms);
  }

  SigmaSet eval(const VarRef& var, const Expr& e) const {
    auto it = env_.find(var.name);
    if (it == env_.end()) {
      throw Error(ErrorCode::Evaluation,
                  at(e.pos) + "unbound variable '" + var.name + "'");
    }
    return it->second;
  }

  SigmaSet eval(const AntiExpr& a, const Expr&) const {
    return antiset((*this)(*a.inner));
  }

  SigmaSet eval(const BinaryExpr& b, const Expr& e) const {
    switch (b.op) {
      case BinaryOp::HatIntersect:
        return hat_intersect((*this)(*b.lhs), (*this)(*b.rhs));
      case BinaryOp::StarDiff:
        return star_diff((*this)(*b.lhs), (*this)(*b.rhs));
      case BinaryOp::Fuse:
        break;
    }
    std::vector<SigmaSet> terms;
    for (const Expr* operand : fusion_operands(e)) terms.push_back((*this)(*operand));
    if (terms.size() >= 3) audit_chain(terms, e.pos);
    return chain_value(terms);
  }

  // Every triple of chain positions must be locally associative for the
  // chain's value to be independent of how it is bracketed.
  void audit_chain(const std::vector<SigmaSet>& terms, SourcePos pos) const {
    const std::size_t n = terms.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const TriadReport triad = triad_system(terms[i], terms[j], terms[k]);
          if (triad.locally_associative) continue;
          const std::string message =
              at(pos) + "fusion chain operands " + std::to_string(i + 1) + ", " +
              std::to_string(j + 1) + ", " + std::to_string(k + 1) +
              " are not locally associative (ordering " +
              std::string(to_string(*triad.first_failing_order())) +
              " fails); replay: " +
              replay_localassoc(terms[i], terms[j], terms[k]);
          if (options_.chain_policy == ChainPolicy::Error) {
            throw Error(ErrorCode::Evaluation, message);
          }
          if (warnings_) warnings_->push_back(message + "; left fold applied");
          return;
        }
      }
    }
  }

  const Environment& env_;
  const EvalOptions& options_;
  std::vector<std::string>* warnings_;
};

std::size_t count_var(const Expr& e, std::string_view name) {
  struct Counter {
    std::string_view name;
    std::size_t operator()(const SetLiteral&) const { return 0; }
    std::size_t operator()(const VarRef& v) const { return v.name == name ? 1 : 0; }
    std::size_t operator()(const BinaryExpr& b) const {
      return count_var(*b.lhs, name) + count_var(*b.rhs, name);
    }
    std::size_t operator()(const AntiExpr& a) const {
      return count_var(*a.inner, name);
    }
  };
  return std::visit(Counter{name}, e.node);
}

bool is_var(const Expr& e, std::string_view name) {
  const auto* v = std::get_if<VarRef>(&e.node);
  return v && v->name == name;
}

class StatementEvaluator {
 public:
  StatementEvaluator(Environment& env, const EvalOptions& options,
                     std::vector<std::string>& warnings)
      : env_(env), options_(options), warnings_(warnings) {}

  Outcome operator()(const Binding& b) {
    SigmaSet value = expr(*b.value);
    env_[b.name] = value;
    return BindingOutcome{b.name, std::move(value)};
  }

  Outcome operator()(const ExprStatement& s) { return ValueOutcome{expr(*s.value)}; }

  Outcome operator()(const SolveStatement& s) {
    const auto& var = s.variable;
    const std::string where = at(s.lhs->pos) + "solve " + var + ": ";
    const auto operands = fusion_operands(*s.lhs);
    std::size_t direct = 0;
    for (const Expr* op : operands) direct += is_var(*op, var) ? 1 : 0;
    const std::size_t total = count_var(*s.lhs, var);
    if (total == 0) {
      throw Error(ErrorCode::Evaluation,
                  where + "the unknown does not occur on the left side");
    }
    if (total > 1) {
      throw Error(ErrorCode::Evaluation,
                  where + "the unknown must occur exactly once on the left side");
    }
    if (direct != 1) {
      throw Error(ErrorCode::Evaluation,
                  where + "the unknown must be a top-level operand of the "
                          "left-side fusion");
    }
    if (count_var(*s.rhs, var) != 0) {
      throw Error(ErrorCode::Evaluation,
                  where + "the unknown must not occur on the right side");
    }
    if (operands.size() > 2) {
      throw Error(ErrorCode::Evaluation,
                  where + "the left side has " + std::to_string(operands.size() - 1) +
                      " known operands; fusion is not associative, so folding "
                      "them into one term is unsound. Bind their fusion to a "
                      "name and solve against that name instead");
    }

    SigmaSet a;
    for (const Expr* op : operands) {
      if (!is_var(*op, var)) a = expr(*op);
    }
    SigmaSet b = expr(*s.rhs);
    SolveResult result = solve_fusion_equation(a, b);
    if (result.status == SolveStatus::Solved) env_[var] = result.candidate;
    return SolveOutcome{var, std::move(a), std::move(b), std::move(result)};
  }

  Outcome operator()(const CheckStatement& s) {
    std::vector<SigmaSet> args;
    for (const auto& arg : s.args) args.push_back(expr(*arg));
    switch (s.kind) {
      case CheckKind::Assoc: {
        AssocOutcome out{{args.at(0), args.at(1), args.at(2)}, {}, {}, {}, false};
        const auto& [a, b, c] = out.args;
        out.e_s = eval_chain(a, b, c);
        out.left_fold = fuse(fuse(a, b), c);
        out.right_fold = fuse(a, fuse(b, c));
        out.verdict = is_assoc_order(a, b, c);
        return out;
      }
      case CheckKind::LocalAssoc: {
        LocalAssocOutcome out{{args.at(0), args.at(1), args.at(2)}, {}, false};
        out.triad = triad_system(args[0], args[1], args[2]);
        out.verdict = is_locally_associative(args[0], args[1], args[2]);
        return out;
      }
      case CheckKind::Group:
        return GroupOutcome{check_group(args)};
      case CheckKind::AntielementFree: {
        AfOutcome out{args, is_antielement_free_family(args), std::nullopt};
        for (std::size_t i = 0; i < args.size() && !out.witness; ++i) {
          for (std::size_t j = 0; j < args.size(); ++j) {
            if (!hat_intersect(args[i], args[j]).empty()) {
              out.witness = std::pair{i, j};
              break;
            }
          }
        }
        return out;
      }
    }
    throw Error(ErrorCode::Evaluation, "unknown check");
  }

 private:
  SigmaSet expr(const Expr& e) const {
    return evaluate_expr(e, env_, options_, &warnings_);
  }

  Environment& env_;
  const EvalOptions& options_;
  std::vector<std::string>& warnings_;
};

}  // namespace

SigmaSet evaluate_expr(const Expr& expr, const Environment& env,
                       const EvalOptions& options,
                       std::vector<std::string>* warnings) {
  return ExprEvaluator(env, options, warnings)(expr);
}

Evaluation evaluate(const Statement& stmt, Environment& env,
                    const EvalOptions& options) {
  Evaluation result{ValueOutcome{}, {}};
  StatementEvaluator visitor(env, options, result.warnings);
  result.outcome = std::visit(visitor, stmt.node);
  return result;
}

}  // namespace sigma::lang
