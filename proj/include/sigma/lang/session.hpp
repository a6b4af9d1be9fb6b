#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/error.hpp"
#include "sigma/lang/evaluator.hpp"

namespace sigma::lang {

enum class RecordStatus { Ok, Error, CheckFailed, NoSolution, OracleInfeasible };

struct ErrorInfo {
  ErrorCode code;
  std::string message;
};

/// The result of one statement, or of a failed parse.
struct Record {
  std::string kind;   // expr, binding, solve, check, error
  std::string input;  // statement source
  std::optional<Outcome> outcome;
  std::vector<std::string> warnings;
  std::optional<ErrorInfo> error;

  RecordStatus status() const;
  bool ok() const { return status() == RecordStatus::Ok; }
};

enum class OutputFormat { Human, Json };

struct Rendered {
  std::string out;  // results
  std::string err;  // warnings and errors
};

/// Human mode prints non-binding results on `out`. Json mode prints one
/// object per statement on `out`. Diagnostics go to `err` in both modes.
Rendered render(const Record& record, OutputFormat format);

/// One JSON object (no trailing newline) with kind, input, ok, result and,
/// for failed checks, witness.
std::string to_json_line(const Record& record);

/// A statement sequence evaluated against a persistent environment.
class Session {
 public:
  explicit Session(EvalOptions options = {}) : options_(options) {}

  /// Parses all of `source`, then evaluates statements in order, stopping at
  /// the first error. A parse failure yields a single error record.
  std::vector<Record> run(std::string_view source);

  const Environment& env() const noexcept { return env_; }
  const EvalOptions& options() const noexcept { return options_; }

 private:
  EvalOptions options_;
  Environment env_;
};

}  // namespace sigma::lang
