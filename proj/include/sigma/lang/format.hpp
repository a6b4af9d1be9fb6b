#pragma once

#include <string>

#include "sigma/lang/evaluator.hpp"

namespace sigma::lang {

/// Canonical rendering `{a, b*, c}`; parses back to the same value.
std::string format(const SigmaSet& s);

/// Stable `key: value` lines, newline-terminated.
std::string format(const Outcome& outcome);

std::string_view to_string(SolveStatus status) noexcept;
std::string_view to_string(GroupFailure failure) noexcept;

// Replayable source text for witnesses.
std::string replay_assoc(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c);
std::string replay_localassoc(const SigmaSet& x, const SigmaSet& y,
                              const SigmaSet& z);
std::string replay_witness(const GroupWitness& witness);

}  // namespace sigma::lang
