#pragma once

// Test-only helpers. The naive model below re-states the calculus directly
// as set comprehensions over (base, is_anti) pairs and shares no code with
// the library's merge-based implementation.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigma/core.hpp"

namespace sigma::test {

inline SigmaSet S(std::initializer_list<std::string_view> atoms) {
  return SigmaSet::parse_atoms(atoms);
}

namespace naive {

using Elem = std::pair<std::string, bool>;  // (base, is_anti)
using Set = std::set<Elem>;

inline Elem star(const Elem& e) { return {e.first, !e.second}; }

inline Set hat(const Set& x, const Set& y) {
  Set out;
  for (const auto& e : x) {
    if (y.count(star(e))) out.insert(e);
  }
  return out;
}

inline Set diff(const Set& x, const Set& y) {
  Set h = hat(x, y);
  Set out;
  for (const auto& e : x) {
    if (!h.count(e)) out.insert(e);
  }
  return out;
}

inline Set fuse(const Set& x, const Set& y) {
  Set out = diff(x, y);
  for (const auto& e : diff(y, x)) out.insert(e);
  return out;
}

inline Set from(const SigmaSet& s) {
  Set out;
  for (const auto& a : s) out.insert({a.base(), a.is_anti()});
  return out;
}

inline SigmaSet to(const Set& s) {
  std::vector<Atom> atoms;
  for (const auto& [b, anti] : s) atoms.emplace_back(b, anti ? Polarity::Anti : Polarity::Plain);
  return SigmaSet::from_atoms(atoms);
}

/// All 3^n sets over bases b0..b{n-1}, base i absent / plain / anti.
inline std::vector<Set> universe(const std::vector<std::string>& bases) {
  std::vector<Set> out{Set{}};
  for (const auto& b : bases) {
    std::vector<Set> next;
    for (const auto& s : out) {
      next.push_back(s);
      Set p = s;
      p.insert({b, false});
      next.push_back(p);
      Set a = s;
      a.insert({b, true});
      next.push_back(a);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace naive

inline std::vector<SigmaSet> universe_sets(const std::vector<std::string>& bases) {
  std::vector<SigmaSet> out;
  for (const auto& s : naive::universe(bases)) out.push_back(naive::to(s));
  return out;
}

inline const std::vector<std::string> kThreeBases = {"1", "2", "3"};
inline const std::vector<std::string> kTwoBases = {"1", "2"};
inline const std::vector<std::string> kSixBases = {"a", "b", "c", "d", "e", "f"};

/// Uniform random canonical σ-set over `bases`.
inline SigmaSet random_set(std::mt19937_64& rng, const std::vector<std::string>& bases) {
  std::uniform_int_distribution<int> state(0, 2);
  std::vector<Atom> atoms;
  for (const auto& b : bases) {
    const int s = state(rng);
    if (s == 1) atoms.emplace_back(b, Polarity::Plain);
    if (s == 2) atoms.emplace_back(b, Polarity::Anti);
  }
  return SigmaSet::from_atoms(atoms);
}

}  // namespace sigma::test
