#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace pmonoid {

/// A formal sum of atoms: (atom, multiplicity) pairs, atoms ascending and
/// multiplicities positive. The empty factorization factors the identity.
template <class Atom>
struct Factorization {
  std::vector<std::pair<Atom, std::uint64_t>> parts;

  std::uint64_t length() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0},
                           [](std::uint64_t s, const auto& p) { return s + p.second; });
  }

  /// Builds from an unsorted list of atoms with repetitions.
  static Factorization from_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    Factorization z;
    for (auto& a : atoms) {
      if (!z.parts.empty() && z.parts.back().first == a)
        ++z.parts.back().second;
      else
        z.parts.emplace_back(std::move(a), 1);
    }
    return z;
  }

  /// Atoms with repetition, ascending.
  std::vector<Atom> expanded() const {
    std::vector<Atom> out;
    for (const auto& [a, k] : parts)
      for (std::uint64_t i = 0; i < k; ++i) out.push_back(a);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization& a, const Factorization& b) { return a.parts <=> b.parts; }
};

/// Result of a possibly length-capped enumeration. `partial` is set when at
/// least one factorization was dropped by the cap.
template <class Atom>
struct FactorizationSet {
  std::vector<Factorization<Atom>> items;
  bool partial = false;

  std::set<std::uint64_t> lengths() const {
    std::set<std::uint64_t> out;
    for (const auto& z : items) out.insert(z.length());
    return out;
  }
};

}  // namespace pmonoid
