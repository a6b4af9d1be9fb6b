#include "sigma/lang/session.hpp"

#include "json.hpp"
#include "sigma/lang/format.hpp"
#include "sigma/lang/parser.hpp"

namespace sigma::lang {

using nlohmann::json;

namespace {

std::string_view kind_of(const Statement& stmt) {
  switch (stmt.node.index()) {
    case 0: return "binding";
    case 1: return "expr";
    case 2: return "solve";
    default: return "check";
  }
}

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSymbol: return "invalid-symbol";
    case ErrorCode::Usage: return "usage";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Evaluation: return "evaluation";
    case ErrorCode::OracleInfeasible: return "oracle-infeasible";
    case ErrorCode::ContractViolation: return "contract-violation";
  }
  return "unknown";
}

json set_list(const std::vector<SigmaSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(format(s));
  return out;
}

struct JsonBuilder {
  json& record;

  void operator()(const ValueOutcome& v) {
    record["result"] = {{"value", format(v.value)}};
  }
  void operator()(const BindingOutcome& b) {
    record["result"] = {{"name", b.name}, {"value", format(b.value)}};
  }
  void operator()(const SolveOutcome& s) {
    const auto& r = s.result;
    json result = {{"variable", s.variable},
                   {"a", format(s.a)},
                   {"b", format(s.b)},
                   {"status", to_string(r.status)},
                   {"candidate", format(r.candidate)},
                   {"verified", r.verified},
                   {"residual", format(r.residual)}};
    if (r.status == SolveStatus::Solved) result["solution"] = format(r.candidate);
    if (!r.diagnostic.empty()) result["diagnostic"] = r.diagnostic;
    record["result"] = std::move(result);
  }
  void operator()(const AssocOutcome& a) {
    record["check"] = "assoc";
    record["result"] = {{"verdict", a.verdict},
                        {"e_s", format(a.e_s)},
                        {"left_fold", format(a.left_fold)},
                        {"right_fold", format(a.right_fold)}};
    if (!a.verdict) {
      record["witness"] = {{"replay", replay_assoc(a.args[0], a.args[1], a.args[2])}};
    }
  }
  void operator()(const LocalAssocOutcome& l) {
    const auto& t = l.triad;
    json orders = json::object();
    for (auto o : kAllOrderings) orders[std::string(to_string(o))] = t.verdict(o);
    record["check"] = "localassoc";
    record["result"] = {{"verdict", l.verdict},
                        {"e_x", format(t.e_x)},
                        {"e_y", format(t.e_y)},
                        {"e_z", format(t.e_z)},
                        {"orderings", std::move(orders)}};
    if (auto o = t.first_failing_order()) {
      const auto p = permutation(*o);
      json failing = json::array();
      for (auto f : t.failing_orders()) failing.push_back(to_string(f));
      record["witness"] = {
          {"ordering", to_string(*o)},
          {"failing_orderings", std::move(failing)},
          {"replay", replay_assoc(l.args[p[0]], l.args[p[1]], l.args[p[2]])}};
    }
  }
  void operator()(const GroupOutcome& g) {
    const auto& r = g.context.report;
    record["check"] = "group";
    record["result"] = {
        {"verdict", g.context.is_group()},
        {"members", set_list(g.context.members)},
        {"has_identity", r.has_identity},
        {"closed_under_antiset", r.closed_under_antiset},
        {"closed_under_fusion", r.closed_under_fusion},
        {"all_triples_locally_associative", r.all_triples_locally_associative}};
    if (r.failing_witness) {
      const auto& w = *r.failing_witness;
      json witness = {{"failure", to_string(w.failure)},
                      {"operands", set_list(w.operands)},
                      {"replay", replay_witness(w)}};
      if (w.ordering) witness["ordering"] = to_string(*w.ordering);
      record["witness"] = std::move(witness);
    }
  }
  void operator()(const AfOutcome& a) {
    record["check"] = "af";
    record["result"] = {{"verdict", a.verdict}, {"family", set_list(a.family)}};
    if (a.witness) {
      const auto& lhs = a.family[a.witness->first];
      const auto& rhs = a.family[a.witness->second];
      record["witness"] = {{"pair", {a.witness->first, a.witness->second}},
                           {"replay", format(lhs) + " & " + format(rhs)}};
    }
  }
};

bool verdict_of(const Outcome& outcome) {
  if (const auto* a = std::get_if<AssocOutcome>(&outcome)) return a->verdict;
  if (const auto* l = std::get_if<LocalAssocOutcome>(&outcome)) return l->verdict;
  if (const auto* g = std::get_if<GroupOutcome>(&outcome)) return g->context.is_group();
  if (const auto* f = std::get_if<AfOutcome>(&outcome)) return f->verdict;
  return true;
}

}  // namespace

RecordStatus Record::status() const {
  if (error || !outcome) return RecordStatus::Error;
  if (const auto* s = std::get_if<SolveOutcome>(&*outcome)) {
    switch (s->result.status) {
      case SolveStatus::Solved: return RecordStatus::Ok;
      case SolveStatus::NoSolution: return RecordStatus::NoSolution;
      case SolveStatus::OracleInfeasible: return RecordStatus::OracleInfeasible;
    }
  }
  return verdict_of(*outcome) ? RecordStatus::Ok : RecordStatus::CheckFailed;
}

std::string to_json_line(const Record& record) {
  json j = {{"kind", record.kind}, {"input", record.input}, {"ok", record.ok()},
            {"result", nullptr}};
  if (record.outcome) std::visit(JsonBuilder{j}, *record.outcome);
  if (!record.warnings.empty()) j["warnings"] = record.warnings;
  if (record.error) {
    j["error"] = {{"code", code_name(record.error->code)},
                  {"message", record.error->message}};
  }
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Rendered render(const Record& record, OutputFormat fmt) {
  Rendered r;
  for (const auto& w : record.warnings) r.err += "warning: " + w + '\n';
  if (record.error) r.err += "error: " + record.error->message + '\n';
  if (fmt == OutputFormat::Json) {
    r.out = to_json_line(record) + '\n';
  } else if (record.outcome &&
             !std::holds_alternative<BindingOutcome>(*record.outcome)) {
    r.out = format(*record.outcome);
  }
  return r;
}

std::vector<Record> Session::run(std::string_view source) {
  std::vector<Record> records;
  std::vector<Statement> program;
  try {
    program = parse(source);
  } catch (const Error& e) {
    Record rec;
    rec.kind = "error";
    rec.input = std::string(source);
    rec.error = ErrorInfo{e.code(), e.what()};
    records.push_back(std::move(rec));
    return records;
  }

  for (const auto& stmt : program) {
    Record rec;
    rec.kind = std::string(kind_of(stmt));
    rec.input = stmt.source;
    try {
      Evaluation ev = evaluate(stmt, env_, options_);
      rec.outcome = std::move(ev.outcome);
      rec.warnings = std::move(ev.warnings);
    } catch (const Error& e) {
      rec.error = ErrorInfo{e.code(), e.what()};
    }
    const bool failed = rec.error.has_value();
    records.push_back(std::move(rec));
    if (failed) break;
  }
  return records;
}

}  // namespace sigma::lang
