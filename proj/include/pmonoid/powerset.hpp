#pragma once

// Nonempty finite sets of nonnegative rationals under Minkowski sum: the
// elements of the finitary power monoid P_fin(M) and of its restricted
// submonoid P_fin,0(M) (sets containing 0).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmonoid/error.hpp"
#include "pmonoid/puiseux.hpp"
#include "pmonoid/rational.hpp"

namespace pmonoid {

/// Minkowski sum of two strictly increasing sequences, as a strictly
/// increasing sequence. k-way merge over the |s| translates of t.
template <class T>
std::vector<T> minkowski_sum_sorted(std::span<const T> s, std::span<const T> t) {
  std::vector<T> out;
  if (s.empty() || t.empty()) return out;
  out.reserve(std::max(s.size(), t.size()));
  using Cursor = std::pair<T, std::pair<std::size_t, std::size_t>>;  // (value, (i, j))
  auto later = [](const Cursor& a, const Cursor& b) { return b.first < a.first; };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < s.size(); ++i) heap.push({s[i] + t[0], {i, 0}});
  while (!heap.empty()) {
    auto [v, ij] = heap.top();
    heap.pop();
    auto [i, j] = ij;
    if (out.empty() || out.back() < v) out.push_back(v);
    if (j + 1 < t.size()) heap.push({s[i] + t[j + 1], {i, j + 1}});
  }
  return out;
}

class FinSet {
 public:
  /// Sorts and deduplicates; the result must be nonempty.
  static FinSet from(std::vector<Rational> elems) {
    if (elems.empty()) throw monoid_error(error_kind::invalid_input, "finite sets must be nonempty");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return FinSet(std::move(elems));
  }

  FinSet(std::initializer_list<Rational> elems) : FinSet(from(std::vector<Rational>(elems))) {}

  const std::vector<Rational>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Rational& min() const noexcept { return elems_.front(); }
  const Rational& max() const noexcept { return elems_.back(); }
  bool contains(const Rational& q) const { return std::binary_search(elems_.begin(), elems_.end(), q); }

  /// 0 in S, i.e. S meets the unit group {0} of a reduced Puiseux monoid.
  bool is_restricted() const noexcept { return elems_.front().is_zero(); }
  bool is_identity() const noexcept { return elems_.size() == 1 && elems_.front().is_zero(); }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ", ";
      s += elems_[i].str();
    }
    return s + "}";
  }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& a, const FinSet& b) { return a.elems_ <=> b.elems_; }

 private:
  explicit FinSet(std::vector<Rational> sorted) : elems_(std::move(sorted)) {}
  std::vector<Rational> elems_;
};

inline FinSet minkowski_sum(const FinSet& s, const FinSet& t) {
  return FinSet::from(minkowski_sum_sorted<Rational>(s.elements(), t.elements()));
}

/// |B| = 1 gives |B + C| = |C|; |B| >= 2 gives |B + C| > |C|.
inline bool size_bound_check(const FinSet& b, const FinSet& c) {
  const auto n = minkowski_sum(b, c).size();
  return b.size() == 1 ? n == c.size() : n > c.size();
}

/// S + d.
inline FinSet shift(const FinSet& s, const Rational& d) {
  std::vector<Rational> out;
  for (const auto& x : s.elements()) out.push_back(x + d);
  return FinSet::from(std::move(out));
}

/// S - d; requires d <= min(S).
inline FinSet shift_down(const FinSet& s, const Rational& d) {
  if (d > s.min())
    throw monoid_error(error_kind::would_go_negative, "cannot shift " + s.str() + " down by " + d.str());
  std::vector<Rational> out;
  for (const auto& x : s.elements()) out.push_back(sub(x, d));
  return FinSet::from(std::move(out));
}

/// (S - min S, min S).
inline std::pair<FinSet, Rational> normalize(const FinSet& s) { return {shift_down(s, s.min()), s.min()}; }

/// Whether every element lies in M (and 0 in S when restricted).
inline bool in_power_monoid(const FinSet& s, const PuiseuxMonoid& m, bool restricted) {
  if (restricted && !s.is_restricted()) return false;
  return std::all_of(s.elements().begin(), s.elements().end(), [&](const Rational& q) { return m.contains(q); });
}

/// Parses "{0, 1/2, 3/4}". Braces are required; order and duplicates are not
/// significant.
inline FinSet parse_finset(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw monoid_error(error_kind::invalid_input, "set must be written as {a, b, ...}: '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<Rational> elems;
  while (true) {
    auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    if (item.empty()) throw monoid_error(error_kind::invalid_input, "empty entry in set literal");
    elems.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return FinSet::from(std::move(elems));
}

}  // namespace pmonoid
