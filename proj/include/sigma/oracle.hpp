#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sigma/core.hpp"

// Brute-force enumerators and reference implementations. They exist to
// cross-check the calculus, so nothing here may call into the assoc or group
// modules, and reference_fuse must not call core fuse.
namespace sigma::oracle {

inline constexpr std::size_t kMaxUniverseBases = 16;

/// An ordered, duplicate-free set of base symbols.
class Universe {
 public:
  Universe() = default;
  /// Sorts and dedupes; throws Error(InvalidSymbol) on a malformed base.
  explicit Universe(std::vector<std::string> bases);

  /// Bases of every atom in the given sets.
  static Universe of(std::initializer_list<const SigmaSet*> sets);

  const std::vector<std::string>& bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return bases_.size(); }

  /// 3^size(), or throws Error(OracleInfeasible) above kMaxUniverseBases.
  std::size_t count() const;

 private:
  std::vector<std::string> bases_;
};

/// Visits all 3^n canonical σ-sets over `u`, base i being absent, plain or
/// anti, with the last base varying fastest. Throws Error(OracleInfeasible)
/// for oversize universes.
void for_each_sigma_set(const Universe& u,
                        const std::function<void(const SigmaSet&)>& visit);

std::vector<SigmaSet> enumerate_sigma_sets(const Universe& u);

/// Fusion re-derived by pair cancellation: pool both atom lists as a
/// multiset, cancel opposite-polarity pairs per base, keep what is left.
SigmaSet reference_fuse(const SigmaSet& x, const SigmaSet& y);

}  // namespace sigma::oracle
