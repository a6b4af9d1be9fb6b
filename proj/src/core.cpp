#include "sigma/core.hpp"

#include <algorithm>

#include "sigma/error.hpp"

namespace sigma {

bool is_valid_base(std::string_view base) noexcept {
  return !base.empty() && base.find('*') == std::string_view::npos;
}

Atom::Atom(std::string base, Polarity polarity)
    : base_(std::move(base)), polarity_(polarity) {
  if (!is_valid_base(base_)) {
    throw Error(ErrorCode::InvalidSymbol,
                "invalid atom symbol '" + base_ +
                    "': base must be non-empty and must not contain '*'");
  }
}

Atom Atom::parse(std::string_view text) {
  if (!text.empty() && text.back() == '*') {
    return Atom(std::string(text.substr(0, text.size() - 1)), Polarity::Anti);
  }
  return Atom(std::string(text), Polarity::Plain);
}

std::string Atom::to_string() const {
  return is_anti() ? base_ + "*" : base_;
}

bool is_canonical(std::span<const Atom> atoms) noexcept {
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    // Strictly increasing bases: sorted, no duplicates, no {x, x*}.
    if (!(atoms[i - 1].base() < atoms[i].base())) return false;
  }
  return true;
}

SigmaSet SigmaSetBuilder::finish(std::string_view operation) && {
  if (!is_canonical(atoms_)) {
    throw Error(ErrorCode::ContractViolation,
                std::string(operation) + " produced a non-canonical σ-set");
  }
  return SigmaSet(std::move(atoms_));
}

SigmaSet::SigmaSet(std::initializer_list<Atom> atoms)
    : SigmaSet(from_atoms(std::span<const Atom>(atoms.begin(), atoms.size()))) {}

SigmaSet SigmaSet::from_atoms(std::span<const Atom> raw) {
  std::vector<Atom> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // After dedupe a base appears at most twice, adjacent, as (x, x*).
  std::vector<Atom> kept;
  kept.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    if (i + 1 < sorted.size() && sorted[i].base() == sorted[i + 1].base()) {
      i += 2;
      continue;
    }
    kept.push_back(std::move(sorted[i]));
    ++i;
  }
  return SigmaSet(std::move(kept));
}

SigmaSet SigmaSet::parse_atoms(std::initializer_list<std::string_view> atoms) {
  std::vector<Atom> raw;
  raw.reserve(atoms.size());
  for (auto text : atoms) raw.push_back(Atom::parse(text));
  return from_atoms(raw);
}

namespace {

auto find_base(const std::vector<Atom>& atoms, std::string_view base) {
  return std::lower_bound(
      atoms.begin(), atoms.end(), base,
      [](const Atom& a, std::string_view b) { return a.base() < b; });
}

}  // namespace

std::optional<Polarity> SigmaSet::polarity_of(std::string_view base) const {
  auto it = find_base(atoms_, base);
  if (it == atoms_.end() || it->base() != base) return std::nullopt;
  return it->polarity();
}

bool SigmaSet::contains(const Atom& atom) const {
  return polarity_of(atom.base()) == atom.polarity();
}

std::vector<std::string> SigmaSet::bases() const {
  std::vector<std::string> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.base());
  return out;
}

std::string SigmaSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ", ";
    out += atoms_[i].to_string();
  }
  out += '}';
  return out;
}

SigmaSet hat_intersect(const SigmaSet& x, const SigmaSet& y) {
  SigmaSetBuilder out;
  for (const auto& atom : x) {
    if (y.contains(atom.anti())) out.push_back(atom);
  }
  return std::move(out).finish("hat_intersect");
}

SigmaSet star_diff(const SigmaSet& x, const SigmaSet& y) {
  const SigmaSet removed = hat_intersect(x, y);
  SigmaSetBuilder out;
  std::set_difference(x.begin(), x.end(), removed.begin(), removed.end(),
                      std::back_inserter(out));
  return std::move(out).finish("star_diff");
}

SigmaSet fuse(const SigmaSet& x, const SigmaSet& y) {
  const SigmaSet left = star_diff(x, y);
  const SigmaSet right = star_diff(y, x);
  SigmaSetBuilder out;
  out.reserve(left.size() + right.size());
  std::set_union(left.begin(), left.end(), right.begin(), right.end(),
                 std::back_inserter(out));
  return std::move(out).finish("fuse");
}

SigmaSet antiset(const SigmaSet& x) {
  SigmaSetBuilder out;
  out.reserve(x.size());
  for (const auto& atom : x) out.push_back(atom.anti());
  return std::move(out).finish("antiset");
}

bool is_antielement_free_family(std::span<const SigmaSet> family) {
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!hat_intersect(a, b).empty()) return false;
    }
  }
  return true;
}

}  // namespace sigma
