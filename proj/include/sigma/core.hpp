#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

enum class Polarity : std::uint8_t { Plain, Anti };

constexpr Polarity flip(Polarity p) noexcept {
  return p == Polarity::Plain ? Polarity::Anti : Polarity::Plain;
}

/// A base symbol together with a polarity: `x` or its antielement `x*`.
class Atom {
 public:
  /// Throws Error(InvalidSymbol) when `base` is empty or contains '*'.
  Atom(std::string base, Polarity polarity = Polarity::Plain);

  /// Parses the textual form `base` or `base*`.
  static Atom parse(std::string_view text);

  const std::string& base() const noexcept { return base_; }
  Polarity polarity() const noexcept { return polarity_; }
  bool is_anti() const noexcept { return polarity_ == Polarity::Anti; }

  Atom anti() const { return Atom(base_, flip(polarity_), Unchecked{}); }

  std::string to_string() const;

  // Lexicographic by base, Plain before Anti.
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  struct Unchecked {};
  Atom(std::string base, Polarity polarity, Unchecked)
      : base_(std::move(base)), polarity_(polarity) {}

  std::string base_;
  Polarity polarity_;
};

bool is_valid_base(std::string_view base) noexcept;

/// A finite canonical σ-set: sorted by base, at most one atom per base.
///
/// Construction collapses duplicates and then removes both atoms of every
/// base that occurs with both polarities, so `{x, x*}` is the empty set.
class SigmaSet {
 public:
  SigmaSet() = default;
  SigmaSet(std::initializer_list<Atom> atoms);

  /// Canonicalizing constructor (dedupe, then annihilate pairs).
  static SigmaSet from_atoms(std::span<const Atom> raw);
  /// Convenience for tests and literals: each string is `base` or `base*`.
  static SigmaSet parse_atoms(std::initializer_list<std::string_view> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }

  bool contains(const Atom& atom) const;
  std::optional<Polarity> polarity_of(std::string_view base) const;
  std::vector<std::string> bases() const;

  /// `{a, b*, c}`; the empty set renders as `{}`.
  std::string to_string() const;

  // Deterministic total order used for witness selection and enumeration.
  friend std::strong_ordering operator<=>(const SigmaSet& a,
                                          const SigmaSet& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.atoms_ <=> b.atoms_;
  }
  friend bool operator==(const SigmaSet&, const SigmaSet&) = default;

 private:
  friend class SigmaSetBuilder;
  explicit SigmaSet(std::vector<Atom> canonical) : atoms_(std::move(canonical)) {}

  std::vector<Atom> atoms_;
};

/// Internal helper for operations that already produce sorted,
/// pair-free atom sequences. `finish()` verifies canonicality and throws
/// Error(ContractViolation) otherwise.
class SigmaSetBuilder {
 public:
  using value_type = Atom;

  void push_back(Atom atom) { atoms_.push_back(std::move(atom)); }
  void reserve(std::size_t n) { atoms_.reserve(n); }
  SigmaSet finish(std::string_view operation) &&;

 private:
  std::vector<Atom> atoms_;
};

bool is_canonical(std::span<const Atom> atoms) noexcept;

/// X ∩̂ Y: the atoms of X whose antielement lies in Y.
SigmaSet hat_intersect(const SigmaSet& x, const SigmaSet& y);

/// X ⊛ Y: X minus X ∩̂ Y.
SigmaSet star_diff(const SigmaSet& x, const SigmaSet& y);

/// Fusion, the annihilating union: (X ⊛ Y) ∪ (Y ⊛ X).
SigmaSet fuse(const SigmaSet& x, const SigmaSet& y);

/// Pointwise polarity flip.
SigmaSet antiset(const SigmaSet& x);

/// True iff hat_intersect(A, B) is empty for every ordered pair of members,
/// the diagonal included.
bool is_antielement_free_family(std::span<const SigmaSet> family);

}  // namespace sigma
