#include "sigma/assoc.hpp"

#include "sigma/error.hpp"

namespace sigma {

FusionChain::FusionChain(std::vector<SigmaSet> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error(ErrorCode::Usage, "a fusion chain needs at least one term");
  }
}

SigmaSet FusionChain::value() const { return chain_value(terms_); }

SigmaSet chain_value(const FusionChain& chain) { return chain.value(); }

SigmaSet chain_value(std::span<const SigmaSet> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::Usage, "a fusion chain needs at least one term");
  }
  SigmaSet acc = terms.front();
  for (const auto& term : terms.subspan(1)) acc = fuse(acc, term);
  return acc;
}

SigmaSet eval_chain(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c) {
  const std::array forward{a, b, c};
  const std::array mirrored{antiset(c), antiset(b), antiset(a)};
  return fuse(chain_value(forward), chain_value(mirrored));
}

bool is_directly_associative(const SigmaSet& a, const SigmaSet& b,
                             const SigmaSet& c) {
  return fuse(fuse(a, b), c) == fuse(a, fuse(b, c));
}

bool is_assoc_order(const SigmaSet& a, const SigmaSet& b, const SigmaSet& c) {
  const bool by_chain = eval_chain(a, b, c).empty();
  const bool direct = is_directly_associative(a, b, c);
  if (by_chain != direct) {
    throw Error(ErrorCode::ContractViolation,
                "evaluation chain and direct associativity disagree on (" +
                    a.to_string() + ", " + b.to_string() + ", " +
                    c.to_string() + ")");
  }
  return by_chain;
}

std::string_view to_string(Ordering ordering) noexcept {
  switch (ordering) {
    case Ordering::XYZ: return "XYZ";
    case Ordering::YXZ: return "YXZ";
    case Ordering::ZXY: return "ZXY";
    case Ordering::XZY: return "XZY";
    case Ordering::YZX: return "YZX";
    case Ordering::ZYX: return "ZYX";
  }
  return "?";
}

std::optional<Ordering> parse_ordering(std::string_view text) noexcept {
  for (auto o : kAllOrderings) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

std::array<int, 3> permutation(Ordering ordering) noexcept {
  const auto name = to_string(ordering);
  return {name[0] - 'X', name[1] - 'X', name[2] - 'X'};
}

std::optional<Ordering> TriadReport::first_failing_order() const {
  for (auto o : kAllOrderings) {
    if (!verdict(o)) return o;
  }
  return std::nullopt;
}

std::vector<Ordering> TriadReport::failing_orders() const {
  std::vector<Ordering> out;
  for (auto o : kAllOrderings) {
    if (!verdict(o)) out.push_back(o);
  }
  return out;
}

TriadReport triad_system(const SigmaSet& x, const SigmaSet& y,
                         const SigmaSet& z) {
  TriadReport report;
  report.e_x = eval_chain(x, y, z);
  report.e_y = eval_chain(y, z, x);
  report.e_z = eval_chain(z, x, y);
  report.locally_associative =
      report.e_x.empty() && report.e_y.empty() && report.e_z.empty();

  const std::array<const SigmaSet*, 3> operands{&x, &y, &z};
  for (std::size_t i = 0; i < kAllOrderings.size(); ++i) {
    const auto p = permutation(kAllOrderings[i]);
    report.per_order_verdicts[i] = is_directly_associative(
        *operands[p[0]], *operands[p[1]], *operands[p[2]]);
  }
  return report;
}

bool is_locally_associative(const SigmaSet& x, const SigmaSet& y,
                            const SigmaSet& z) {
  const TriadReport report = triad_system(x, y, z);
  const bool all_orders = !report.first_failing_order().has_value();
  if (all_orders != report.locally_associative) {
    throw Error(ErrorCode::ContractViolation,
                "triad system and exhaustive ordering check disagree on (" +
                    x.to_string() + ", " + y.to_string() + ", " +
                    z.to_string() + ")");
  }
  return report.locally_associative;
}

}  // namespace sigma
