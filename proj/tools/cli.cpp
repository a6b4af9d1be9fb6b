#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "sigma/sigma.h"

namespace sigma_cli {

namespace {

struct SessionDeleter {
  void operator()(sigma_session* s) const { sigma_session_free(s); }
};
struct BatchDeleter {
  void operator()(sigma_batch* b) const { sigma_batch_free(b); }
};
struct SetDeleter {
  void operator()(sigma_set* s) const { sigma_set_free(s); }
};
using SessionPtr = std::unique_ptr<sigma_session, SessionDeleter>;
using BatchPtr = std::unique_ptr<sigma_batch, BatchDeleter>;
using SetPtr = std::unique_ptr<sigma_set, SetDeleter>;

struct Options {
  bool json = false;
  bool strict = false;
};

int exit_code(sigma_record_status status, bool strict) {
  switch (status) {
    case SIGMA_RECORD_OK: return kSuccess;
    case SIGMA_RECORD_ERROR: return kError;
    case SIGMA_RECORD_CHECK_FAILED: return strict ? kCheckFailed : kSuccess;
    case SIGMA_RECORD_NO_SOLUTION: return kNoSolution;
    case SIGMA_RECORD_ORACLE_INFEASIBLE: return kOracleInfeasible;
  }
  return kError;
}

class Runner {
 public:
  Runner(const Options& options, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {
    sigma_session* raw = nullptr;
    if (sigma_session_create(options.strict, &raw) != SIGMA_OK) {
      throw std::runtime_error(sigma_last_error());
    }
    session_.reset(raw);
  }

  /// Evaluates `source`, prints its output and returns the first non-zero
  /// per-statement exit code.
  int eval(const std::string& source) {
    sigma_batch* raw = nullptr;
    const auto fmt = options_.json ? SIGMA_OUTPUT_JSON : SIGMA_OUTPUT_HUMAN;
    if (sigma_session_eval(session_.get(), source.c_str(), fmt, &raw) != SIGMA_OK) {
      err_ << "error: " << sigma_last_error() << '\n';
      return kError;
    }
    BatchPtr batch(raw);
    out_ << sigma_batch_output(batch.get());
    err_ << sigma_batch_diagnostics(batch.get());
    for (size_t i = 0; i < sigma_batch_count(batch.get()); ++i) {
      const int code = exit_code(sigma_batch_record_status(batch.get(), i),
                                 options_.strict);
      if (code != kSuccess) return code;
    }
    return kSuccess;
  }

 private:
  const Options& options_;
  std::ostream& out_;
  std::ostream& err_;
  SessionPtr session_;
};

// Evaluates a closed expression given on the command line and returns its
// canonical text, so one-shot commands are built from literal σ-sets.
bool canonical_operand(const std::string& text, const std::string& label,
                       std::string& canonical, std::ostream& err) {
  sigma_set* raw = nullptr;
  if (sigma_set_parse(text.c_str(), &raw) != SIGMA_OK) {
    err << "error: " << label << ": " << sigma_last_error() << '\n';
    return false;
  }
  SetPtr set(raw);
  char* formatted = nullptr;
  if (sigma_set_format(set.get(), &formatted) != SIGMA_OK) {
    err << "error: " << sigma_last_error() << '\n';
    return false;
  }
  canonical = formatted;
  sigma_string_free(formatted);
  return true;
}

int repl(Runner& runner, std::istream& in, std::ostream& out) {
  std::string line;
  for (;;) {
    out << "σ> " << std::flush;
    if (!std::getline(in, line)) break;
    runner.eval(line);
  }
  out << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Evaluate σ-set expressions: fusion, associativity checks and "
               "one-variable fusion equations.",
               "sigma"};
  Options options;
  app.add_flag("--json", options.json, "Emit one JSON object per statement");
  app.add_flag("--strict", options.strict,
               "Treat non-locally-associative chains as errors and failed "
               "checks as exit code 2");
  app.require_subcommand(1);
  app.fallthrough();

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");

  std::string file;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a .sigma file");
  eval_cmd->add_option("file", file, "Source file")->required();

  std::string a_text;
  std::string b_text;
  auto* solve_cmd = app.add_subcommand("solve", "Solve A + X = B for X");
  solve_cmd->add_option("--a", a_text, "Expression for A")->required();
  solve_cmd->add_option("--b", b_text, "Expression for B")->required();

  std::string kind;
  std::vector<std::string> operands;
  auto* check_cmd = app.add_subcommand("check", "One-shot verdict with witness");
  check_cmd->add_option("kind", kind, "assoc, localassoc, group or af")
      ->required()
      ->check(CLI::IsMember({"assoc", "localassoc", "group", "af"}));
  check_cmd->add_option("operands", operands, "σ-set expressions")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    Runner runner(options, out, err);

    if (*repl_cmd) return repl(runner, in, out);

    if (*eval_cmd) {
      std::ifstream stream(file);
      if (!stream) {
        err << "error: cannot read file '" << file << "'\n";
        return kError;
      }
      std::ostringstream source;
      source << stream.rdbuf();
      return runner.eval(source.str());
    }

    if (*solve_cmd) {
      std::string a;
      std::string b;
      if (!canonical_operand(a_text, "--a", a, err) ||
          !canonical_operand(b_text, "--b", b, err)) {
        return kError;
      }
      return runner.eval("solve X in " + a + " + X = " + b);
    }

    const bool ternary = kind == "assoc" || kind == "localassoc";
    if (ternary && operands.size() != 3) {
      err << "error: check " << kind << " takes exactly 3 operands\n";
      return kError;
    }
    std::string source = kind + "(";
    for (std::size_t i = 0; i < operands.size(); ++i) {
      std::string canonical;
      if (!canonical_operand(operands[i], "operand " + std::to_string(i + 1),
                             canonical, err)) {
        return kError;
      }
      source += (i ? ", " : "") + canonical;
    }
    return runner.eval(source + ")");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace sigma_cli
