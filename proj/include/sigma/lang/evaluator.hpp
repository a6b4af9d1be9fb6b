#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigma/assoc.hpp"
#include "sigma/group.hpp"
#include "sigma/lang/ast.hpp"

namespace sigma::lang {

using Environment = std::map<std::string, SigmaSet, std::less<>>;

/// What to do with a fusion chain of three or more operands that contains
/// a triple which is not locally associative. The left fold is always
/// well defined; Error turns the diagnostic into an evaluation error.
enum class ChainPolicy { Warn, Error };

struct EvalOptions {
  ChainPolicy chain_policy = ChainPolicy::Warn;
};

struct ValueOutcome {
  SigmaSet value;
};

struct BindingOutcome {
  std::string name;
  SigmaSet value;
};

struct SolveOutcome {
  std::string variable;
  SigmaSet a;  // fused known operands of the left side
  SigmaSet b;
  SolveResult result;
};

struct AssocOutcome {
  std::array<SigmaSet, 3> args;
  SigmaSet e_s;
  SigmaSet left_fold;   // (A ∪ B) ∪ C
  SigmaSet right_fold;  // A ∪ (B ∪ C)
  bool verdict = false;
};

struct LocalAssocOutcome {
  std::array<SigmaSet, 3> args;
  TriadReport triad;
  bool verdict = false;
};

struct GroupOutcome {
  GroupContext context;
};

struct AfOutcome {
  std::vector<SigmaSet> family;
  bool verdict = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // member indices
};

using Outcome = std::variant<ValueOutcome, BindingOutcome, SolveOutcome,
                             AssocOutcome, LocalAssocOutcome, GroupOutcome,
                             AfOutcome>;

struct Evaluation {
  Outcome outcome;
  std::vector<std::string> warnings;
};

/// Evaluates an expression against `env`. Warnings about non-locally
/// associative chains are appended to `warnings` when non-null.
SigmaSet evaluate_expr(const Expr& expr, const Environment& env,
                       const EvalOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);

/// Evaluates one statement. Bindings, and solved equations, update `env`.
/// Throws Error(Evaluation) for unbound variables and malformed solves.
Evaluation evaluate(const Statement& stmt, Environment& env,
                    const EvalOptions& options = {});

}  // namespace sigma::lang
