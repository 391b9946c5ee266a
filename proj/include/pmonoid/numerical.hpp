#pragma once

// Numerical monoids: cofinite submonoids of (N_0, +). Membership goes through
// the Apery set with respect to the multiplicity, so queries are O(1) for any
// element size and memory is O(multiplicity).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pmonoid/error.hpp"
#include "pmonoid/factorization.hpp"

namespace pmonoid {

class NumericalMonoid {
 public:
  using value_type = std::int64_t;

  /// Largest multiplicity times number of atoms we are willing to tabulate.
  static constexpr std::int64_t table_budget = std::int64_t{1} << 23;

  /// Largest element accepted by divisor scans.
  static constexpr std::int64_t divisor_scan_limit = 100'000'000;

  static NumericalMonoid from_generators(std::span<const value_type> gens) {
    if (gens.empty()) throw monoid_error(error_kind::invalid_input, "empty generator list");
    std::vector<value_type> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() <= 0) throw monoid_error(error_kind::invalid_input, "generators must be positive");
    value_type g = 0;
    for (auto x : sorted) g = std::gcd(g, x);
    if (g != 1)
      throw monoid_error(error_kind::not_cofinite,
                         "generators have gcd " + std::to_string(g) + "; divide it out first");
    if (!fits_tables(sorted.front(), sorted.size()))
      throw monoid_error(error_kind::unsupported_ambient,
                         "multiplicity " + std::to_string(sorted.front()) + " too large to tabulate");
    return NumericalMonoid(std::move(sorted));
  }

  static NumericalMonoid from_generators(std::initializer_list<value_type> gens) {
    std::vector<value_type> v(gens);
    return from_generators(std::span<const value_type>(v));
  }

  /// Whether a monoid with this multiplicity and generator count can be built.
  static bool fits_tables(value_type multiplicity, std::size_t generator_count) {
    return multiplicity > 0 && multiplicity <= table_budget &&
           multiplicity * static_cast<value_type>(generator_count) <= table_budget;
  }

  /// Minimal generating set (= atoms), ascending.
  const std::vector<value_type>& generators() const noexcept { return atoms_; }
  const std::vector<value_type>& atoms() const noexcept { return atoms_; }
  value_type multiplicity() const noexcept { return atoms_.front(); }

  /// max(N_0 \ N), or -1 when N = N_0.
  value_type frobenius() const noexcept { return frobenius_; }

  /// apery()[r] is the least element of N congruent to r mod multiplicity().
  const std::vector<value_type>& apery() const noexcept { return prefix_tables_.back(); }

  bool contains(value_type x) const {
    if (x < 0) return false;
    return x >= apery()[static_cast<std::size_t>(x % multiplicity())];
  }

  std::vector<value_type> gaps() const {
    std::vector<value_type> out;
    for (value_type x = 1; x <= frobenius_; ++x)
      if (!contains(x)) out.push_back(x);
    return out;
  }

  /// All factorizations of x over the atoms, ordered lexicographically by
  /// exponent vector over ascending atoms.
  FactorizationSet<value_type> factorizations(value_type x,
                                              std::optional<std::uint64_t> max_length = {}) const {
    require_member(x);
    FactorizationSet<value_type> out;
    std::vector<std::uint64_t> counts(atoms_.size(), 0);
    std::vector<std::vector<std::uint64_t>> vectors;
    enumerate(atoms_.size() - 1, x, 0, counts, max_length, vectors, out.partial);
    std::sort(vectors.begin(), vectors.end());
    out.items.reserve(vectors.size());
    for (const auto& e : vectors) {
      Factorization<value_type> z;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) z.parts.emplace_back(atoms_[i], e[i]);
      out.items.push_back(std::move(z));
    }
    return out;
  }

  std::set<std::uint64_t> length_set(value_type x) const {
    require_member(x);
    if (x == 0) throw monoid_error(error_kind::invalid_input, "length set of the identity");
    return factorizations(x).lengths();
  }

  /// All d in N with x - d in N, ascending.
  std::vector<value_type> divisors(value_type x) const {
    require_member(x);
    if (x > divisor_scan_limit)
      throw monoid_error(error_kind::enumeration_limit, "divisor scan of " + std::to_string(x));
    std::vector<value_type> out;
    for (value_type d = 0; d <= x; ++d)
      if (contains(d) && contains(x - d)) out.push_back(d);
    return out;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(atoms_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) { return a.atoms_ == b.atoms_; }

 private:
  static constexpr value_type unreachable = std::numeric_limits<value_type>::max();

  explicit NumericalMonoid(std::vector<value_type> gens) {
    const value_type m = gens.front();
    std::vector<value_type> table(static_cast<std::size_t>(m), unreachable);
    table[0] = 0;
    atoms_.push_back(m);
    prefix_tables_.push_back(table);
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const value_type g = gens[i];
      if (g >= table[static_cast<std::size_t>(g % m)]) continue;  // sum of smaller atoms
      add_generator(table, g);
      atoms_.push_back(g);
      prefix_tables_.push_back(table);
    }
    value_type worst = 0;
    for (auto v : table) worst = std::max(worst, v);
    frobenius_ = worst - m;
  }

  // Round-robin update of the shortest-residue table when adding generator g.
  static void add_generator(std::vector<value_type>& table, value_type g) {
    const auto m = static_cast<value_type>(table.size());
    const value_type d = std::gcd(g, m);
    for (value_type r = 0; r < d; ++r) {
      value_type best = unreachable, start = -1;
      for (value_type q = r; q < m; q += d)
        if (table[static_cast<std::size_t>(q)] < best) {
          best = table[static_cast<std::size_t>(q)];
          start = q;
        }
      if (best == unreachable) continue;
      value_type q = start;
      for (value_type step = 1; step < m / d; ++step) {
        value_type next = (q + g) % m;
        auto& slot = table[static_cast<std::size_t>(next)];
        slot = std::min(slot, table[static_cast<std::size_t>(q)] + g);
        q = next;
      }
    }
  }

  bool prefix_contains(std::size_t j, value_type x) const {
    const auto& t = prefix_tables_[j];
    return x >= t[static_cast<std::size_t>(x % multiplicity())];
  }

  // Chooses the count of atom j (largest first) so that the remainder stays in
  // the submonoid generated by atoms 0..j-1; output-sensitive.
  void enumerate(std::size_t j, value_type rem, std::uint64_t length, std::vector<std::uint64_t>& counts,
                 const std::optional<std::uint64_t>& cap, std::vector<std::vector<std::uint64_t>>& out,
                 bool& partial) const {
    const value_type a = atoms_[j];
    if (j == 0) {
      if (rem % a != 0) return;
      auto c = static_cast<std::uint64_t>(rem / a);
      if (cap && length + c > *cap) {
        partial = true;
        return;
      }
      counts[0] = c;
      out.push_back(counts);
      counts[0] = 0;
      return;
    }
    for (value_type c = 0; c * a <= rem; ++c) {
      const value_type r2 = rem - c * a;
      if (!prefix_contains(j - 1, r2)) continue;
      if (cap && length + static_cast<std::uint64_t>(c) > *cap) {
        partial = true;
        break;
      }
      counts[j] = static_cast<std::uint64_t>(c);
      enumerate(j - 1, r2, length + static_cast<std::uint64_t>(c), counts, cap, out, partial);
    }
    counts[j] = 0;
  }

  void require_member(value_type x) const {
    if (!contains(x)) throw monoid_error(error_kind::not_a_member, std::to_string(x) + " is not in " + str());
  }

  std::vector<value_type> atoms_;
  // prefix_tables_[j]: Apery-style table of <atoms_[0..j]> mod multiplicity.
  std::vector<std::vector<value_type>> prefix_tables_;
  value_type frobenius_ = -1;
};

}  // namespace pmonoid
