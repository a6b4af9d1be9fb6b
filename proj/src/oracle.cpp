#include "sigma/oracle.hpp"

#include <algorithm>
#include <map>

#include "sigma/error.hpp"

namespace sigma::oracle {

Universe::Universe(std::vector<std::string> bases) : bases_(std::move(bases)) {
  for (const auto& b : bases_) {
    if (!is_valid_base(b)) {
      throw Error(ErrorCode::InvalidSymbol, "invalid base symbol '" + b + "'");
    }
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

Universe Universe::of(std::initializer_list<const SigmaSet*> sets) {
  std::vector<std::string> bases;
  for (const auto* s : sets) {
    for (const auto& atom : *s) bases.push_back(atom.base());
  }
  return Universe(std::move(bases));
}

std::size_t Universe::count() const {
  if (bases_.size() > kMaxUniverseBases) {
    throw Error(ErrorCode::OracleInfeasible,
                "universe of " + std::to_string(bases_.size()) +
                    " base symbols exceeds the oracle limit of " +
                    std::to_string(kMaxUniverseBases));
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < bases_.size(); ++i) n *= 3;
  return n;
}

void for_each_sigma_set(const Universe& u,
                        const std::function<void(const SigmaSet&)>& visit) {
  const std::size_t total = u.count();
  const auto& bases = u.bases();
  std::vector<int> digits(bases.size(), 0);  // 0 absent, 1 plain, 2 anti
  std::vector<Atom> atoms;
  atoms.reserve(bases.size());
  for (std::size_t n = 0; n < total; ++n) {
    atoms.clear();
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (digits[i] == 1) atoms.emplace_back(bases[i], Polarity::Plain);
      if (digits[i] == 2) atoms.emplace_back(bases[i], Polarity::Anti);
    }
    visit(SigmaSet::from_atoms(atoms));
    for (std::size_t i = bases.size(); i-- > 0;) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
  }
}

std::vector<SigmaSet> enumerate_sigma_sets(const Universe& u) {
  std::vector<SigmaSet> out;
  out.reserve(u.count());
  for_each_sigma_set(u, [&](const SigmaSet& s) { out.push_back(s); });
  return out;
}

SigmaSet reference_fuse(const SigmaSet& x, const SigmaSet& y) {
  struct Counts {
    int plain = 0;
    int anti = 0;
  };
  std::map<std::string, Counts> pool;
  for (const auto* side : {&x, &y}) {
    for (const auto& atom : *side) {
      auto& c = pool[atom.base()];
      (atom.is_anti() ? c.anti : c.plain) += 1;
    }
  }
  std::vector<Atom> survivors;
  for (const auto& [base, c] : pool) {
    const int cancelled = std::min(c.plain, c.anti);
    if (c.plain > cancelled) survivors.emplace_back(base, Polarity::Plain);
    if (c.anti > cancelled) survivors.emplace_back(base, Polarity::Anti);
  }
  return SigmaSet::from_atoms(survivors);
}

}  // namespace sigma::oracle
