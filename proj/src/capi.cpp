#include "sigma/sigma.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sigma/assoc.hpp"
#include "sigma/error.hpp"
#include "sigma/group.hpp"
#include "sigma/lang/evaluator.hpp"
#include "sigma/lang/parser.hpp"
#include "sigma/lang/session.hpp"

struct sigma_set {
  sigma::SigmaSet value;
};

struct sigma_session {
  sigma::lang::Session session;
};

struct sigma_batch {
  std::vector<sigma::lang::RecordStatus> statuses;
  std::string output;
  std::string diagnostics;
};

static_assert(static_cast<int>(sigma::lang::RecordStatus::OracleInfeasible) ==
              SIGMA_RECORD_ORACLE_INFEASIBLE);
static_assert(static_cast<int>(sigma::lang::RecordStatus::CheckFailed) ==
              SIGMA_RECORD_CHECK_FAILED);

namespace {

thread_local std::string last_error;

sigma_status to_status(sigma::ErrorCode code) {
  using sigma::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidSymbol: return SIGMA_ERR_INVALID_SYMBOL;
    case ErrorCode::Usage: return SIGMA_ERR_USAGE;
    case ErrorCode::Parse: return SIGMA_ERR_PARSE;
    case ErrorCode::Evaluation: return SIGMA_ERR_EVALUATION;
    case ErrorCode::OracleInfeasible: return SIGMA_ERR_ORACLE_INFEASIBLE;
    case ErrorCode::ContractViolation: return SIGMA_ERR_CONTRACT;
  }
  return SIGMA_ERR_INTERNAL;
}

template <typename Fn>
sigma_status guarded(Fn&& fn) noexcept {
  last_error.clear();
  try {
    fn();
    return SIGMA_OK;
  } catch (const sigma::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SIGMA_ERR_INTERNAL;
}

sigma_status invalid(const char* what) noexcept {
  last_error = std::string("null argument: ") + what;
  return SIGMA_ERR_INVALID_ARGUMENT;
}

sigma_status emit(sigma::SigmaSet value, sigma_set** out) {
  *out = new sigma_set{std::move(value)};
  return SIGMA_OK;
}

template <typename Op>
sigma_status binary(const sigma_set* x, const sigma_set* y, sigma_set** out,
                    Op op) noexcept {
  if (!x || !y || !out) return invalid("operand or output");
  return guarded([&] { emit(op(x->value, y->value), out); });
}

}  // namespace

extern "C" {

const char* sigma_version(void) { return "1.0.0"; }

const char* sigma_last_error(void) { return last_error.c_str(); }

const char* sigma_status_name(sigma_status status) {
  switch (status) {
    case SIGMA_OK: return "ok";
    case SIGMA_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SIGMA_ERR_INVALID_SYMBOL: return "invalid-symbol";
    case SIGMA_ERR_USAGE: return "usage";
    case SIGMA_ERR_PARSE: return "parse";
    case SIGMA_ERR_EVALUATION: return "evaluation";
    case SIGMA_ERR_ORACLE_INFEASIBLE: return "oracle-infeasible";
    case SIGMA_ERR_CONTRACT: return "contract-violation";
    case SIGMA_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void sigma_string_free(char* text) { std::free(text); }

sigma_status sigma_set_parse(const char* text, sigma_set** out) {
  if (!text || !out) return invalid("text or output");
  return guarded([&] {
    const auto expr = sigma::lang::parse_expression(text);
    emit(sigma::lang::evaluate_expr(*expr, {}), out);
  });
}

sigma_status sigma_set_clone(const sigma_set* set, sigma_set** out) {
  if (!set || !out) return invalid("set or output");
  return guarded([&] { emit(set->value, out); });
}

void sigma_set_free(sigma_set* set) { delete set; }

size_t sigma_set_size(const sigma_set* set) { return set ? set->value.size() : 0; }

int sigma_set_equal(const sigma_set* a, const sigma_set* b) {
  return a && b && a->value == b->value;
}

sigma_status sigma_set_format(const sigma_set* set, char** out) {
  if (!set || !out) return invalid("set or output");
  return guarded([&] {
    const std::string text = set->value.to_string();
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

sigma_status sigma_hat_intersect(const sigma_set* x, const sigma_set* y,
                                 sigma_set** out) {
  return binary(x, y, out, sigma::hat_intersect);
}

sigma_status sigma_star_diff(const sigma_set* x, const sigma_set* y,
                             sigma_set** out) {
  return binary(x, y, out, sigma::star_diff);
}

sigma_status sigma_fuse(const sigma_set* x, const sigma_set* y, sigma_set** out) {
  return binary(x, y, out, sigma::fuse);
}

sigma_status sigma_antiset(const sigma_set* x, sigma_set** out) {
  if (!x || !out) return invalid("operand or output");
  return guarded([&] { emit(sigma::antiset(x->value), out); });
}

sigma_status sigma_eval_chain(const sigma_set* a, const sigma_set* b,
                              const sigma_set* c, sigma_set** out) {
  if (!a || !b || !c || !out) return invalid("operand or output");
  return guarded([&] { emit(sigma::eval_chain(a->value, b->value, c->value), out); });
}

sigma_status sigma_is_assoc_order(const sigma_set* a, const sigma_set* b,
                                  const sigma_set* c, int* out) {
  if (!a || !b || !c || !out) return invalid("operand or output");
  return guarded([&] { *out = sigma::is_assoc_order(a->value, b->value, c->value); });
}

sigma_status sigma_is_locally_associative(const sigma_set* x, const sigma_set* y,
                                          const sigma_set* z, int* out) {
  if (!x || !y || !z || !out) return invalid("operand or output");
  return guarded(
      [&] { *out = sigma::is_locally_associative(x->value, y->value, z->value); });
}

sigma_status sigma_check_group(const sigma_set* const* members, size_t count,
                               int* is_group) {
  if ((!members && count) || !is_group) return invalid("members or output");
  return guarded([&] {
    std::vector<sigma::SigmaSet> family;
    family.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!members[i]) throw sigma::Error(sigma::ErrorCode::Usage, "null group member");
      family.push_back(members[i]->value);
    }
    *is_group = sigma::check_group(family).is_group();
  });
}

sigma_status sigma_solve(const sigma_set* a, const sigma_set* b,
                         sigma_solve_status* status, sigma_set** candidate) {
  if (!a || !b || !status || !candidate) return invalid("operand or output");
  return guarded([&] {
    auto result = sigma::solve_fusion_equation(a->value, b->value);
    switch (result.status) {
      case sigma::SolveStatus::Solved: *status = SIGMA_SOLVE_SOLVED; break;
      case sigma::SolveStatus::NoSolution: *status = SIGMA_SOLVE_NO_SOLUTION; break;
      case sigma::SolveStatus::OracleInfeasible:
        *status = SIGMA_SOLVE_ORACLE_INFEASIBLE;
        break;
    }
    emit(std::move(result.candidate), candidate);
  });
}

sigma_status sigma_session_create(int strict, sigma_session** out) {
  if (!out) return invalid("output");
  return guarded([&] {
    sigma::lang::EvalOptions options;
    options.chain_policy =
        strict ? sigma::lang::ChainPolicy::Error : sigma::lang::ChainPolicy::Warn;
    *out = new sigma_session{sigma::lang::Session(options)};
  });
}

void sigma_session_free(sigma_session* session) { delete session; }

sigma_status sigma_session_eval(sigma_session* session, const char* source,
                                sigma_output_format format, sigma_batch** out) {
  if (!session || !source || !out) return invalid("session, source or output");
  return guarded([&] {
    const auto fmt = format == SIGMA_OUTPUT_JSON ? sigma::lang::OutputFormat::Json
                                                 : sigma::lang::OutputFormat::Human;
    auto batch = std::make_unique<sigma_batch>();
    for (const auto& record : session->session.run(source)) {
      batch->statuses.push_back(record.status());
      auto rendered = sigma::lang::render(record, fmt);
      batch->output += rendered.out;
      batch->diagnostics += rendered.err;
    }
    *out = batch.release();
  });
}

sigma_status sigma_session_lookup(const sigma_session* session, const char* name,
                                  sigma_set** out) {
  if (!session || !name || !out) return invalid("session, name or output");
  return guarded([&] {
    const auto& env = session->session.env();
    auto it = env.find(std::string_view(name));
    if (it == env.end()) {
      throw sigma::Error(sigma::ErrorCode::Evaluation,
                         std::string("unbound variable '") + name + "'");
    }
    emit(it->second, out);
  });
}

size_t sigma_batch_count(const sigma_batch* batch) {
  return batch ? batch->statuses.size() : 0;
}

sigma_record_status sigma_batch_record_status(const sigma_batch* batch,
                                              size_t index) {
  if (!batch || index >= batch->statuses.size()) return SIGMA_RECORD_ERROR;
  return static_cast<sigma_record_status>(batch->statuses[index]);
}

const char* sigma_batch_output(const sigma_batch* batch) {
  return batch ? batch->output.c_str() : "";
}

const char* sigma_batch_diagnostics(const sigma_batch* batch) {
  return batch ? batch->diagnostics.c_str() : "";
}

void sigma_batch_free(sigma_batch* batch) { delete batch; }

}  // extern "C"
