#include "sigma/group.hpp"

#include <algorithm>

#include "sigma/error.hpp"

namespace sigma {

bool GroupContext::contains(const SigmaSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

GroupContext check_group(std::span<const SigmaSet> members) {
  if (members.empty()) {
    throw Error(ErrorCode::Usage, "group check needs at least one member");
  }
  GroupContext ctx;
  ctx.members.assign(members.begin(), members.end());
  std::sort(ctx.members.begin(), ctx.members.end());
  ctx.members.erase(std::unique(ctx.members.begin(), ctx.members.end()),
                    ctx.members.end());

  auto& report = ctx.report;
  const auto& ms = ctx.members;
  auto note = [&report](GroupWitness w) {
    if (!report.failing_witness) report.failing_witness = std::move(w);
  };

  report.has_identity = ctx.contains(SigmaSet{});
  if (!report.has_identity) note({GroupFailure::MissingIdentity, {}, {}});

  report.closed_under_antiset = true;
  for (const auto& a : ms) {
    if (!ctx.contains(antiset(a))) {
      report.closed_under_antiset = false;
      note({GroupFailure::AntisetNotMember, {a}, {}});
      break;
    }
  }

  report.closed_under_fusion = true;
  for (std::size_t i = 0; i < ms.size() && report.closed_under_fusion; ++i) {
    for (const auto& b : ms) {
      if (!ctx.contains(fuse(ms[i], b))) {
        report.closed_under_fusion = false;
        note({GroupFailure::FusionNotMember, {ms[i], b}, {}});
        break;
      }
    }
  }

  report.all_triples_locally_associative = true;
  for (const auto& x : ms) {
    for (const auto& y : ms) {
      for (const auto& z : ms) {
        if (is_locally_associative(x, y, z)) continue;
        report.all_triples_locally_associative = false;
        note({GroupFailure::TripleNotLocallyAssociative,
              {x, y, z},
              triad_system(x, y, z).first_failing_order()});
        return ctx;
      }
    }
  }
  return ctx;
}

bool replay_witness(const GroupContext& context, const GroupWitness& witness) {
  const auto& ops = witness.operands;
  switch (witness.failure) {
    case GroupFailure::MissingIdentity:
      return context.contains(SigmaSet{});
    case GroupFailure::AntisetNotMember:
      return context.contains(antiset(ops.at(0)));
    case GroupFailure::FusionNotMember:
      return context.contains(fuse(ops.at(0), ops.at(1)));
    case GroupFailure::TripleNotLocallyAssociative: {
      if (!witness.ordering) {
        return is_locally_associative(ops.at(0), ops.at(1), ops.at(2));
      }
      const auto p = permutation(*witness.ordering);
      return is_directly_associative(ops.at(p[0]), ops.at(p[1]), ops.at(p[2]));
    }
  }
  return true;
}

std::vector<SigmaSet> brute_force_solve(const SigmaSet& a, const SigmaSet& b,
                                        const oracle::Universe& universe) {
  std::vector<SigmaSet> solutions;
  oracle::for_each_sigma_set(universe, [&](const SigmaSet& x) {
    if (fuse(a, x) == b) solutions.push_back(x);
  });
  return solutions;
}

SolveResult solve_fusion_equation(const SigmaSet& a, const SigmaSet& b) {
  SolveResult result;
  result.candidate = fuse(b, antiset(a));
  result.residual = fuse(a, result.candidate);
  result.verified = result.residual == b;
  if (result.verified) {
    result.status = SolveStatus::Solved;
    return result;
  }

  // A foreign base in X would survive fusion with A and show up in B, so the
  // bases of A and B form a complete search universe.
  const auto universe = oracle::Universe::of({&a, &b});
  if (universe.size() > oracle::kMaxUniverseBases) {
    result.status = SolveStatus::OracleInfeasible;
    result.diagnostic = "candidate failed verification and the oracle universe (" +
                        std::to_string(universe.size()) +
                        " bases) exceeds the limit of " +
                        std::to_string(oracle::kMaxUniverseBases);
    return result;
  }
  const auto solutions = brute_force_solve(a, b, universe);
  if (!solutions.empty()) {
    throw Error(ErrorCode::ContractViolation,
                "candidate " + result.candidate.to_string() +
                    " failed but the oracle found solution " +
                    solutions.front().to_string() + " for A = " +
                    a.to_string() + ", B = " + b.to_string());
  }
  result.status = SolveStatus::NoSolution;
  return result;
}

}  // namespace sigma
