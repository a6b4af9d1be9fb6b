#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigma/assoc.hpp"
#include "sigma/core.hpp"
#include "sigma/oracle.hpp"

namespace sigma {

enum class GroupFailure {
  MissingIdentity,              // operands: none
  AntisetNotMember,             // operands: {A}; A* is not a member
  FusionNotMember,              // operands: {A, B}; A ∪ B is not a member
  TripleNotLocallyAssociative,  // operands: {X, Y, Z}; ordering is set
};

struct GroupWitness {
  GroupFailure failure;
  std::vector<SigmaSet> operands;
  std::optional<Ordering> ordering;
};

struct GroupReport {
  bool has_identity = false;
  bool closed_under_antiset = false;
  bool closed_under_fusion = false;
  bool all_triples_locally_associative = false;
  std::optional<GroupWitness> failing_witness;
};

/// A finite family of σ-sets (deduplicated, in canonical order) together
/// with its group-axiom verdicts.
struct GroupContext {
  std::vector<SigmaSet> members;
  GroupReport report;

  bool is_group() const noexcept {
    return report.has_identity && report.closed_under_antiset &&
           report.closed_under_fusion &&
           report.all_triples_locally_associative;
  }
  bool contains(const SigmaSet& s) const;
};

/// Checks identity, antiset closure, fusion closure and local associativity
/// of every ordered triple (with repetition). The witness is the first
/// failure in that order, scanning members in canonical order.
/// Throws Error(Usage) on an empty family.
GroupContext check_group(std::span<const SigmaSet> members);

/// Re-runs the single check a witness names; returns that check's verdict,
/// which is false for every witness check_group produced.
bool replay_witness(const GroupContext& context, const GroupWitness& witness);

enum class SolveStatus { Solved, NoSolution, OracleInfeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  SigmaSet candidate;  // always B ∪ A*
  bool verified = false;
  SigmaSet residual;   // A ∪ candidate
  std::string diagnostic;
};

/// Solves A ∪ X = B. The candidate B ∪ A* is always verified; when it fails,
/// the brute-force oracle over the bases of A and B decides between
/// NoSolution and a contract violation (a solution the candidate missed,
/// raised as Error(ContractViolation)). Oversize universes yield
/// OracleInfeasible with the unverified candidate.
SolveResult solve_fusion_equation(const SigmaSet& a, const SigmaSet& b);

/// Every canonical X over `universe` with A ∪ X = B.
/// Throws Error(OracleInfeasible) beyond oracle::kMaxUniverseBases bases.
std::vector<SigmaSet> brute_force_solve(const SigmaSet& a, const SigmaSet& b,
                                        const oracle::Universe& universe);

}  // namespace sigma
