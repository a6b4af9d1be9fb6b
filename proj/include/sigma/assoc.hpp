#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sigma/core.hpp"

namespace sigma {

/// An ordered, non-empty sequence of σ-sets evaluated by left-fold fusion:
/// value(A B C) = (A ∪ B) ∪ C.
class FusionChain {
 public:
  /// Throws Error(Usage) on an empty sequence.
  explicit FusionChain(std::vector<SigmaSet> terms);

  const std::vector<SigmaSet>& terms() const noexcept { return terms_; }
  std::size_t length() const noexcept { return terms_.size(); }

  SigmaSet value() const;

 private:
  std::vector<SigmaSet> terms_;
};

SigmaSet chain_value(const FusionChain& chain);
SigmaSet chain_value(std::span<const SigmaSet> terms);

/// E_S = value(A B C) ∪ value(C* B* A*).
SigmaSet eval_chain(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c);

/// (A ∪ B) ∪ C == A ∪ (B ∪ C), computed directly.
bool is_directly_associative(const SigmaSet& a, const SigmaSet& b,
                             const SigmaSet& c);

/// True iff E_S is empty. The direct comparison is evaluated as well and a
/// disagreement raises Error(ContractViolation).
bool is_assoc_order(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c);

/// The six orderings of a triple (X, Y, Z), listed in Heap's permutation
/// order. Each letter names which operand sits at that position.
enum class Ordering : std::uint8_t { XYZ, YXZ, ZXY, XZY, YZX, ZYX };

inline constexpr std::array<Ordering, 6> kAllOrderings = {
    Ordering::XYZ, Ordering::YXZ, Ordering::ZXY,
    Ordering::XZY, Ordering::YZX, Ordering::ZYX};

std::string_view to_string(Ordering ordering) noexcept;
std::optional<Ordering> parse_ordering(std::string_view text) noexcept;

/// Operand indices (0 = X, 1 = Y, 2 = Z) in the given ordering.
std::array<int, 3> permutation(Ordering ordering) noexcept;

struct TriadReport {
  SigmaSet e_x;  // E(X, Y, Z)
  SigmaSet e_y;  // E(Y, Z, X)
  SigmaSet e_z;  // E(Z, X, Y)
  bool locally_associative = false;
  std::array<bool, 6> per_order_verdicts{};  // indexed like kAllOrderings

  bool verdict(Ordering ordering) const {
    return per_order_verdicts[static_cast<std::size_t>(ordering)];
  }
  std::optional<Ordering> first_failing_order() const;
  std::vector<Ordering> failing_orders() const;
};

TriadReport triad_system(const SigmaSet& x, const SigmaSet& y,
                         const SigmaSet& z);

/// Decided by the triad system being all-empty; cross-checked against the
/// six direct orderings (Error(ContractViolation) on disagreement).
bool is_locally_associative(const SigmaSet& x, const SigmaSet& y,
                            const SigmaSet& z);

}  // namespace sigma
