#include "sigma/lang/format.hpp"

#include <sstream>

namespace sigma::lang {

std::string format(const SigmaSet& s) { return s.to_string(); }

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::NoSolution: return "no-solution";
    case SolveStatus::OracleInfeasible: return "oracle-infeasible";
  }
  return "?";
}

std::string_view to_string(GroupFailure failure) noexcept {
  switch (failure) {
    case GroupFailure::MissingIdentity: return "missing-identity";
    case GroupFailure::AntisetNotMember: return "antiset-not-member";
    case GroupFailure::FusionNotMember: return "fusion-not-member";
    case GroupFailure::TripleNotLocallyAssociative:
      return "triple-not-locally-associative";
  }
  return "?";
}

namespace {

std::string call(std::string_view name, std::initializer_list<const SigmaSet*> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (const auto* a : args) {
    if (!first) out += ", ";
    out += format(*a);
    first = false;
  }
  return out + ')';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct HumanFormatter {
  std::ostringstream& os;

  void operator()(const ValueOutcome& v) { os << format(v.value) << '\n'; }

  void operator()(const BindingOutcome& b) {
    os << b.name << " = " << format(b.value) << '\n';
  }

  void operator()(const SolveOutcome& s) {
    const auto& r = s.result;
    os << "solve: " << s.variable << '\n'
       << "status: " << to_string(r.status) << '\n';
    if (r.status == SolveStatus::Solved) {
      os << s.variable << " = " << format(r.candidate) << '\n'
         << "verified: true\n";
      return;
    }
    os << "candidate: " << format(r.candidate) << '\n'
       << "verified: " << yes_no(r.verified) << '\n'
       << "residual: " << format(r.residual) << '\n';
    if (!r.diagnostic.empty()) os << "diagnostic: " << r.diagnostic << '\n';
  }

  void operator()(const AssocOutcome& a) {
    os << "check: assoc\n"
       << "verdict: " << yes_no(a.verdict) << '\n'
       << "e_s: " << format(a.e_s) << '\n'
       << "left_fold: " << format(a.left_fold) << '\n'
       << "right_fold: " << format(a.right_fold) << '\n';
    if (!a.verdict) {
      os << "witness: " << replay_assoc(a.args[0], a.args[1], a.args[2]) << '\n';
    }
  }

  void operator()(const LocalAssocOutcome& l) {
    const auto& t = l.triad;
    os << "check: localassoc\n"
       << "verdict: " << yes_no(l.verdict) << '\n'
       << "e_x: " << format(t.e_x) << '\n'
       << "e_y: " << format(t.e_y) << '\n'
       << "e_z: " << format(t.e_z) << '\n'
       << "orderings:";
    for (auto o : kAllOrderings) os << ' ' << to_string(o) << '=' << yes_no(t.verdict(o));
    os << '\n';
    if (auto o = t.first_failing_order()) {
      const auto p = permutation(*o);
      os << "witness: " << to_string(*o) << '\n'
         << "replay: "
         << replay_assoc(l.args[p[0]], l.args[p[1]], l.args[p[2]]) << '\n';
    }
  }

  void operator()(const GroupOutcome& g) {
    const auto& r = g.context.report;
    os << "check: group\n"
       << "verdict: " << yes_no(g.context.is_group()) << '\n'
       << "members: " << g.context.members.size() << '\n'
       << "has_identity: " << yes_no(r.has_identity) << '\n'
       << "closed_under_antiset: " << yes_no(r.closed_under_antiset) << '\n'
       << "closed_under_fusion: " << yes_no(r.closed_under_fusion) << '\n'
       << "all_triples_locally_associative: "
       << yes_no(r.all_triples_locally_associative) << '\n';
    if (r.failing_witness) {
      os << "witness: " << to_string(r.failing_witness->failure) << '\n'
         << "replay: " << replay_witness(*r.failing_witness) << '\n';
    }
  }

  void operator()(const AfOutcome& a) {
    os << "check: af\n"
       << "verdict: " << yes_no(a.verdict) << '\n';
    if (a.witness) {
      os << "witness: " << format(a.family[a.witness->first]) << " & "
         << format(a.family[a.witness->second]) << '\n';
    }
  }
};

}  // namespace

std::string format(const Outcome& outcome) {
  std::ostringstream os;
  std::visit(HumanFormatter{os}, outcome);
  return os.str();
}

std::string replay_assoc(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c) {
  return call("assoc", {&a, &b, &c});
}

std::string replay_localassoc(const SigmaSet& x, const SigmaSet& y,
                              const SigmaSet& z) {
  return call("localassoc", {&x, &y, &z});
}

std::string replay_witness(const GroupWitness& w) {
  const auto& ops = w.operands;
  switch (w.failure) {
    case GroupFailure::MissingIdentity:
      return "{}";
    case GroupFailure::AntisetNotMember:
      return "anti(" + format(ops.at(0)) + ")";
    case GroupFailure::FusionNotMember:
      return format(ops.at(0)) + " + " + format(ops.at(1));
    case GroupFailure::TripleNotLocallyAssociative:
      if (w.ordering) {
        const auto p = permutation(*w.ordering);
        return replay_assoc(ops.at(p[0]), ops.at(p[1]), ops.at(p[2]));
      }
      return replay_localassoc(ops.at(0), ops.at(1), ops.at(2));
  }
  return {};
}

}  // namespace sigma::lang
