#pragma once

// Finitely generated Puiseux monoids (submonoids of (Q>=0, +)).
//
// A monoid M = <g_1, ..., g_k> is isomorphic to a numerical monoid N via
// q -> scale * q, where scale = lcm(denominators) / gcd(cleared numerators).
// When N is small enough to tabulate, every query goes through its Apery
// table. Otherwise (truncations whose denominators are products of large
// primes) queries run a congruence-guided search over coefficient vectors:
// generators are processed in a fixed order, and the coefficient of each one
// is determined modulo its order in Q / <later generators>, which leaves very
// few branches when denominators carry exclusive primes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pmonoid/error.hpp"
#include "pmonoid/factorization.hpp"
#include "pmonoid/numerical.hpp"
#include "pmonoid/rational.hpp"

namespace pmonoid {

struct PlainFamily {
  friend bool operator==(const PlainFamily&, const PlainFamily&) = default;
};

/// Truncation <r^0, ..., r^level>.
struct GeometricFamily {
  Rational ratio;
  unsigned level = 0;
  friend bool operator==(const GeometricFamily&, const GeometricFamily&) = default;
};

/// Truncation of the three-sequence family generated by a_n = 1/p_{3n},
/// b_n = (4/5 - S_n)/p_{3n+1}, c_n = (6/7 - S_n)/p_{3n+2}, n <= level, where
/// S_n = sum_{i<=n} 1/p_{3i}.
struct Example33Family {
  unsigned level = 0;
  std::vector<integer> primes;  // p_0 .. p_{3 level + 2}
  std::vector<Rational> a, b, c;
  friend bool operator==(const Example33Family&, const Example33Family&) = default;
};

using FamilyTag = std::variant<PlainFamily, GeometricFamily, Example33Family>;

enum class Route {
  automatic,  // Apery tables when they fit, congruence search otherwise
  apery,
  congruence,
};

namespace detail {

// Coefficient search over positive integer atoms (the scaled generators).
class CongruenceSearch {
 public:
  static constexpr std::uint64_t node_budget = 50'000'000;

  CongruenceSearch(std::vector<integer> atoms, std::vector<std::size_t> order)
      : atoms_(std::move(atoms)), order_(std::move(order)) {
    const std::size_t k = order_.size();
    steps_.resize(k);
    integer suffix = 0;
    for (std::size_t pos = k; pos-- > 0;) {
      Step& s = steps_[pos];
      s.atom = atoms_[order_[pos]];
      s.rest_gcd = suffix;
      if (suffix != 0) {
        s.h = gcd(s.atom, suffix);
        s.period = suffix / s.h;
        s.inverse = s.period == 1 ? integer(0) : mod_inverse((s.atom / s.h) % s.period, s.period);
      }
      suffix = gcd(suffix, s.atom);
    }
  }

  const std::vector<integer>& atoms() const { return atoms_; }

  bool contains(const integer& x) const {
    if (x < 0) return false;
    if (x == 0) return true;
    std::uint64_t nodes = 0;
    std::vector<integer> counts(atoms_.size());
    bool found = false;
    auto stop = [&](const std::vector<integer>&) {
      found = true;
      return false;
    };
    dfs(0, x, counts, nodes, stop);
    return found;
  }

  /// Every exponent vector (indexed like atoms()) representing x.
  template <class Visit>
  void for_each_representation(const integer& x, Visit&& visit) const {
    std::uint64_t nodes = 0;
    std::vector<integer> counts(atoms_.size());
    dfs(0, x, counts, nodes, visit);
  }

 private:
  struct Step {
    integer atom;
    integer rest_gcd;  // gcd of atoms after this position; 0 at the last one
    integer h, period, inverse;
  };

  // Returns false once the visitor asks to stop.
  template <class Visit>
  bool dfs(std::size_t pos, const integer& rem, std::vector<integer>& counts, std::uint64_t& nodes,
           Visit& visit) const {
    if (++nodes > node_budget)
      throw monoid_error(error_kind::enumeration_limit, "coefficient search exceeded node budget");
    const Step& s = steps_[pos];
    const std::size_t idx = order_[pos];
    if (s.rest_gcd == 0) {
      if (rem % s.atom != 0) return true;
      counts[idx] = rem / s.atom;
      bool go = visit(counts);
      counts[idx] = 0;
      return go;
    }
    if (rem % s.h != 0) return true;
    integer c = s.period == 1 ? integer(0) : ((rem / s.h) % s.period) * s.inverse % s.period;
    for (integer used = c * s.atom; used <= rem; c += s.period, used += s.period * s.atom) {
      counts[idx] = c;
      if (!dfs(pos + 1, rem - used, counts, nodes, visit)) {
        counts[idx] = 0;
        return false;
      }
    }
    counts[idx] = 0;
    return true;
  }

  std::vector<integer> atoms_;
  std::vector<std::size_t> order_;
  std::vector<Step> steps_;
};

inline std::uint64_t to_u64(const integer& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw monoid_error(error_kind::enumeration_limit, "multiplicity " + v.str() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

class PuiseuxMonoid {
 public:
  /// Cap on the number of candidates examined by divisor enumeration.
  static constexpr std::uint64_t divisor_candidate_limit = 2'000'000;

  static PuiseuxMonoid from_generators(std::vector<Rational> gens, Route route = Route::automatic,
                                       FamilyTag family = PlainFamily{}) {
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Rational& q) { return q.is_zero(); }),
               gens.end());
    if (gens.empty()) throw monoid_error(error_kind::invalid_input, "empty generator list");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return PuiseuxMonoid(std::move(gens), route, std::move(family));
  }

  /// Input generators, ascending, without duplicates.
  const std::vector<Rational>& generators() const noexcept { return gens_; }
  /// Atoms (the minimal generating set), ascending.
  const std::vector<Rational>& atoms() const noexcept { return atoms_; }
  /// q is in M iff scale * q is in the underlying numerical monoid.
  const Rational& scale() const noexcept { return scale_; }
  /// scale * atom for each atom; coprime as a whole.
  const std::vector<integer>& scaled_atoms() const noexcept { return scaled_atoms_; }
  /// Tabulated numerical monoid, or nullptr when the congruence route is used.
  const NumericalMonoid* numerical() const noexcept { return numerical_.get(); }
  const FamilyTag& family() const noexcept { return family_; }

  bool contains(const Rational& q) const {
    auto x = scaled(q);
    if (!x) return false;
    if (numerical_) return *x <= max_i64() && numerical_->contains(static_cast<std::int64_t>(*x));
    return search_->contains(*x);
  }

  bool is_atom(const Rational& q) const { return std::binary_search(atoms_.begin(), atoms_.end(), q); }

  /// All d in M dividing q in M, ascending.
  std::vector<Rational> divisors(const Rational& q) const {
    require_member(q);
    if (numerical_) {
      std::vector<Rational> out;
      for (auto d : numerical_->divisors(static_cast<std::int64_t>(*scaled(q))))
        out.push_back(Rational(integer(d)) / scale_);
      return out;
    }
    std::set<integer> found;
    std::uint64_t budget = divisor_candidate_limit;
    search_->for_each_representation(*scaled(q), [&](const std::vector<integer>& e) {
      std::vector<integer> limits = e;
      enumerate_subvectors(limits, {}, budget, [&](const integer& d) { found.insert(d); });
      return true;
    });
    return unscale(found);
  }

  FactorizationSet<Rational> factorizations(const Rational& q,
                                            std::optional<std::uint64_t> max_length = {}) const {
    require_member(q);
    FactorizationSet<Rational> out;
    if (numerical_) {
      auto zs = numerical_->factorizations(static_cast<std::int64_t>(*scaled(q)), max_length);
      out.partial = zs.partial;
      for (const auto& z : zs.items) {
        Factorization<Rational> w;
        for (const auto& [a, k] : z.parts) w.parts.emplace_back(Rational(integer(a)) / scale_, k);
        out.items.push_back(std::move(w));
      }
      return out;
    }
    std::vector<std::vector<std::uint64_t>> vectors;
    search_->for_each_representation(*scaled(q), [&](const std::vector<integer>& e) {
      std::vector<std::uint64_t> v(e.size());
      std::uint64_t len = 0;
      for (std::size_t i = 0; i < e.size(); ++i) len += v[i] = detail::to_u64(e[i]);
      if (max_length && len > *max_length)
        out.partial = true;
      else
        vectors.push_back(std::move(v));
      return true;
    });
    std::sort(vectors.begin(), vectors.end());
    for (const auto& v : vectors) {
      Factorization<Rational> w;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) w.parts.emplace_back(atoms_[i], v[i]);
      out.items.push_back(std::move(w));
    }
    return out;
  }

  std::set<std::uint64_t> length_set(const Rational& q) const {
    if (q.is_zero()) throw monoid_error(error_kind::invalid_input, "length set of the identity");
    return factorizations(q).lengths();
  }

  /// Common divisors of every element of xs, ascending.
  std::vector<Rational> common_divisors(std::span<const Rational> xs) const {
    if (xs.empty()) throw monoid_error(error_kind::invalid_input, "empty element set");
    for (const auto& x : xs) require_member(x);
    std::vector<Rational> uniq(xs.begin(), xs.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.front().is_zero()) return {Rational(0)};
    if (numerical_ || uniq.size() == 1) {
      std::vector<Rational> common = divisors(uniq.front());
      for (std::size_t j = 1; j < uniq.size(); ++j) {
        auto dj = divisors(uniq[j]);
        std::vector<Rational> next;
        std::set_intersection(common.begin(), common.end(), dj.begin(), dj.end(), std::back_inserter(next));
        common = std::move(next);
      }
      return common;
    }
    return residue_constrained_common_divisors(uniq);
  }

  /// All maximal common divisors of xs.
  std::vector<Rational> mcd(std::span<const Rational> xs) const {
    auto common = common_divisors(xs);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < common.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j < common.size() && maximal; ++j)
        if (contains(sub(common[j], common[i]))) maximal = false;
      if (maximal) out.push_back(common[i]);
    }
    return out;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].str();
    }
    return s + ">";
  }

  /// Human label, e.g. "geometric(2/3) at truncation level 3".
  std::string label() const {
    if (auto* g = std::get_if<GeometricFamily>(&family_))
      return "geometric(" + g->ratio.str() + ") at truncation level " + std::to_string(g->level);
    if (auto* e = std::get_if<Example33Family>(&family_))
      return "example33 at truncation level " + std::to_string(e->level);
    return str();
  }

  void require_member(const Rational& q) const {
    if (!contains(q)) throw monoid_error(error_kind::not_a_member, q.str() + " is not in " + str());
  }

 private:
  PuiseuxMonoid(std::vector<Rational> gens, Route route, FamilyTag family)
      : gens_(std::move(gens)), family_(std::move(family)) {
    integer den_lcm = 1;
    for (const auto& g : gens_) den_lcm = lcm(den_lcm, g.den());
    integer num_gcd = 0;
    for (const auto& g : gens_) num_gcd = gcd(num_gcd, g.num() * (den_lcm / g.den()));
    scale_ = Rational::reduce(den_lcm, num_gcd);

    std::vector<integer> scaled_gens;
    for (const auto& g : gens_) scaled_gens.push_back(*scaled(g));

    bool tabulate = route == Route::apery;
    if (route == Route::automatic)
      tabulate = scaled_gens.back() <= max_i64() &&
                 NumericalMonoid::fits_tables(static_cast<std::int64_t>(scaled_gens.front()), scaled_gens.size());
    if (tabulate) {
      if (scaled_gens.back() > max_i64())
        throw monoid_error(error_kind::unsupported_ambient, "scaled generators exceed 64 bits");
      std::vector<std::int64_t> small;
      for (const auto& x : scaled_gens) small.push_back(static_cast<std::int64_t>(x));
      numerical_ = std::make_shared<const NumericalMonoid>(NumericalMonoid::from_generators(small));
      for (auto a : numerical_->atoms()) {
        scaled_atoms_.push_back(integer(a));
        atoms_.push_back(Rational(integer(a)) / scale_);
      }
      return;
    }

    // Congruence route: g is an atom iff g is not in the monoid generated by
    // the other generators.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::vector<integer> others;
      std::vector<Rational> other_q;
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (j != i) {
          others.push_back(scaled_gens[j]);
          other_q.push_back(gens_[j]);
        }
      bool atom = others.empty() || detail::CongruenceSearch(others, search_order(other_q)).contains(scaled_gens[i]) == false;
      if (atom) {
        atoms_.push_back(gens_[i]);
        scaled_atoms_.push_back(scaled_gens[i]);
      }
    }
    search_ = std::make_shared<const detail::CongruenceSearch>(scaled_atoms_, search_order(atoms_));
  }

  // Largest denominators first: their coefficients are pinned down modulo the
  // largest periods.
  static std::vector<std::size_t> search_order(const std::vector<Rational>& qs) {
    std::vector<std::size_t> order(qs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (qs[x].den() != qs[y].den()) return qs[x].den() > qs[y].den();
      return qs[y] < qs[x];
    });
    return order;
  }

  static const integer& max_i64() {
    static const integer v(std::numeric_limits<std::int64_t>::max());
    return v;
  }

  std::optional<integer> scaled(const Rational& q) const {
    Rational x = q * scale_;
    if (!x.is_integer()) return std::nullopt;
    return x.num();
  }

  std::vector<Rational> unscale(const std::set<integer>& xs) const {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(Rational(x) / scale_);
    return out;
  }

  // Visits sum(delta_i * scaled_atom_i) for all 0 <= delta <= limits whose
  // coordinates pass `allowed` (when given).
  template <class Emit>
  void enumerate_subvectors(const std::vector<integer>& limits,
                            const std::vector<std::vector<integer>>& allowed, std::uint64_t& budget,
                            Emit&& emit) const {
    std::vector<std::vector<integer>> choices(limits.size());
    for (std::size_t i = 0; i < limits.size(); ++i) {
      if (!allowed.empty()) {
        choices[i] = allowed[i];
      } else {
        if (limits[i] + 1 > budget)
          throw monoid_error(error_kind::enumeration_limit, "divisor enumeration exceeds candidate limit");
        for (integer d = 0; d <= limits[i]; ++d) choices[i].push_back(d);
      }
    }
    std::uint64_t product = 1;
    for (const auto& c : choices) {
      product *= c.size();
      if (product > budget)
        throw monoid_error(error_kind::enumeration_limit, "divisor enumeration exceeds candidate limit");
    }
    budget -= product;
    integer acc = 0;
    walk_choices(choices, 0, acc, emit);
  }

  template <class Emit>
  void walk_choices(const std::vector<std::vector<integer>>& choices, std::size_t i, integer& acc,
                    Emit& emit) const {
    if (i == choices.size()) {
      emit(acc);
      return;
    }
    for (const auto& d : choices[i]) {
      integer add = d * scaled_atoms_[i];
      acc += add;
      walk_choices(choices, i + 1, acc, emit);
      acc -= add;
    }
  }

  // For each atom g let t_g be its order in Q / <other atoms>. In every
  // representation of an element z the coefficient of g is the same mod t_g.
  // So a common divisor d taken as a sub-multiset of a factorization of xs[0]
  // must use, for each g, a coefficient congruent to one available in some
  // factorization of each other xs[j]. Candidates that pass are verified by
  // membership of every difference.
  std::vector<Rational> residue_constrained_common_divisors(const std::vector<Rational>& xs) const {
    const std::size_t k = scaled_atoms_.size();
    std::vector<integer> period(k);
    for (std::size_t i = 0; i < k; ++i) {
      integer g = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) g = gcd(g, scaled_atoms_[j]);
      period[i] = g == 0 ? integer(0) : g / gcd(g, scaled_atoms_[i]);
    }

    // limit[i]: smallest, over the other elements, of the largest coefficient
    // of atom i appearing in any of their factorizations.
    std::vector<std::optional<integer>> limit(k);
    for (std::size_t j = 1; j < xs.size(); ++j) {
      std::vector<integer> best(k, 0);
      search_->for_each_representation(*scaled(xs[j]), [&](const std::vector<integer>& e) {
        for (std::size_t i = 0; i < k; ++i) best[i] = std::max(best[i], e[i]);
        return true;
      });
      for (std::size_t i = 0; i < k; ++i)
        if (!limit[i] || best[i] < *limit[i]) limit[i] = best[i];
    }

    std::vector<integer> targets;
    for (std::size_t j = 1; j < xs.size(); ++j) targets.push_back(*scaled(xs[j]));

    std::set<integer> found;
    std::uint64_t budget = divisor_candidate_limit;
    search_->for_each_representation(*scaled(xs[0]), [&](const std::vector<integer>& e) {
      std::vector<std::vector<integer>> allowed(k);
      for (std::size_t i = 0; i < k; ++i) {
        const integer& lim = *limit[i];
        const integer& t = period[i];
        if (t == 0) {
          for (integer d = 0; d <= std::min(e[i], lim); ++d) allowed[i].push_back(d);
        } else if (lim + 1 >= t) {
          if (e[i] + 1 > budget)
            throw monoid_error(error_kind::enumeration_limit, "common-divisor enumeration exceeds candidate limit");
          for (integer d = 0; d <= e[i]; ++d) allowed[i].push_back(d);
        } else {
          for (integer base = 0; base <= e[i]; base += t) {
            for (integer r = 0; r <= lim && base + r <= e[i]; ++r) allowed[i].push_back(base + r);
            if (allowed[i].size() > budget)
              throw monoid_error(error_kind::enumeration_limit, "common-divisor enumeration exceeds candidate limit");
          }
        }
      }
      enumerate_subvectors(e, allowed, budget, [&](const integer& d) {
        if (found.count(d)) return;
        for (const auto& x : targets)
          if (d > x || !search_->contains(x - d)) return;
        found.insert(d);
      });
      return true;
    });
    return unscale(found);
  }

  std::vector<Rational> gens_;
  std::vector<Rational> atoms_;
  Rational scale_;
  std::vector<integer> scaled_atoms_;
  std::shared_ptr<const NumericalMonoid> numerical_;
  std::shared_ptr<const detail::CongruenceSearch> search_;
  FamilyTag family_;
};

// ---------------------------------------------------------------------------
// Families

/// <r^0, ..., r^level> for 0 < r < 1 with n(r) >= 2; every generator is an atom.
inline PuiseuxMonoid geometric(const Rational& r, unsigned level, Route route = Route::automatic) {
  if (r.is_zero() || r >= Rational(1) || r.num() < 2)
    throw monoid_error(error_kind::family_precondition,
                       "geometric family needs 0 < r < 1 with numerator >= 2, got " + r.str());
  std::vector<Rational> gens;
  for (unsigned n = 0; n <= level; ++n) gens.push_back(power(r, n));
  auto m = PuiseuxMonoid::from_generators(gens, route, GeometricFamily{r, level});
  if (m.atoms().size() != gens.size())
    throw std::logic_error("geometric truncation has a non-atom generator");
  return m;
}

struct ChainLink {
  unsigned n = 0;
  Rational x;     // x_n = n(r)^n / d(r)^(n-1)
  Rational next;  // x_{n+1}
  Rational step;  // x_n - x_{n+1} = (d(r) - n(r)) r^n
  bool step_matches_formula = false;
  bool step_in_monoid = false;
  bool strict = false;  // x_{n+1} != x_n
};

struct GeometricChain {
  Rational ratio;
  std::vector<ChainLink> links;
  bool verified = false;
  std::string note;
};

/// Descending divisibility chain x_1 > x_2 > ... whose principal ideals never
/// stabilize, verified link by link against the truncation of matching depth.
inline GeometricChain geometric_chain(const Rational& r, unsigned depth) {
  if (depth == 0) throw monoid_error(error_kind::invalid_input, "chain depth must be positive");
  const auto monoid = geometric(r, depth);
  const Rational n_r(r.num()), d_r(r.den());
  const Rational coefficient = sub(d_r, n_r);
  auto x_at = [&](unsigned n) { return Rational::reduce(pow(r.num(), n), pow(r.den(), n - 1)); };

  GeometricChain chain{r, {}, true,
                       "step coefficient is d(r) - n(r) = " + coefficient.str() +
                           "; the opposite sign n(r) - d(r) is negative for r < 1 and does not balance"};
  for (unsigned n = 1; n <= depth; ++n) {
    ChainLink link;
    link.n = n;
    link.x = x_at(n);
    link.next = x_at(n + 1);
    auto diff = minus(link.x, link.next);
    link.step = diff.value_or(Rational(0));
    link.step_matches_formula = diff && *diff == coefficient * power(r, n);
    link.step_in_monoid = diff && !diff->is_zero() && monoid.contains(*diff);
    link.strict = link.x != link.next;
    chain.verified = chain.verified && link.step_matches_formula && link.step_in_monoid && link.strict;
    chain.links.push_back(std::move(link));
  }
  return chain;
}

/// Inductive prime choice: p_0 = 17, then for each n the smallest primes
/// p_{3n+1} < p_{3n+2} < p_{3n+3} above
/// max{p_{3n}, 15 * 2^(3n+3), n(4/5 - S_n), n(6/7 - S_n)}.
inline Example33Family example33_family(unsigned level) {
  Example33Family fam;
  fam.level = level;
  fam.primes.push_back(17);
  Rational partial = 0;
  for (unsigned n = 0; n <= level; ++n) {
    const integer p3n = fam.primes[3 * n];
    partial += Rational::reduce(1, p3n);
    const Rational b_res = sub(Rational::reduce(4, 5), partial);
    const Rational c_res = sub(Rational::reduce(6, 7), partial);
    integer floor_bound = std::max({p3n, integer(integer(15) << (3 * n + 3)), b_res.num(), c_res.num()});
    integer p1 = next_prime_above(floor_bound);
    integer p2 = next_prime_above(p1);
    integer p3 = next_prime_above(p2);
    fam.primes.push_back(p1);
    fam.primes.push_back(p2);
    if (n < level) fam.primes.push_back(p3);
    fam.a.push_back(Rational::reduce(1, p3n));
    fam.b.push_back(b_res / Rational(p1));
    fam.c.push_back(c_res / Rational(p2));
  }
  return fam;
}

inline PuiseuxMonoid example33(unsigned level, Route route = Route::automatic) {
  auto fam = example33_family(level);
  std::vector<Rational> gens;
  for (unsigned n = 0; n <= level; ++n) {
    gens.push_back(fam.a[n]);
    gens.push_back(fam.b[n]);
    gens.push_back(fam.c[n]);
  }
  return PuiseuxMonoid::from_generators(std::move(gens), route, std::move(fam));
}

struct GeneratorValuation {
  std::string name;  // "a_0", "b_1", ...
  Rational value;
  integer prime;
  long long valuation = 0;
  bool unique_negative = false;
  bool is_atom = false;
};

struct ValuationReport {
  std::vector<GeneratorValuation> generators;
  bool passed = false;
};

/// For each n: b_n is the only generator with negative valuation at p_{3n+1},
/// c_n the only one negative at p_{3n+2}, and a_n the only a-generator negative
/// at p_{3n}. Also checks each generator against the computed atom set.
inline ValuationReport verify_atoms_by_valuation(const PuiseuxMonoid& m) {
  const auto* fam = std::get_if<Example33Family>(&m.family());
  if (!fam) throw monoid_error(error_kind::invalid_input, "monoid does not carry the example33 family tag");
  ValuationReport report;
  report.passed = true;
  auto negative_count = [](const std::vector<Rational>& pool, const integer& p) {
    return std::count_if(pool.begin(), pool.end(), [&](const Rational& g) { return valuation(g, p) < 0; });
  };
  for (unsigned n = 0; n <= fam->level; ++n) {
    const integer& pa = fam->primes[3 * n];
    const integer& pb = fam->primes[3 * n + 1];
    const integer& pc = fam->primes[3 * n + 2];
    auto add = [&](std::string name, const Rational& g, const integer& p, const std::vector<Rational>& pool) {
      GeneratorValuation row{std::move(name), g, p, valuation(g, p), false, m.is_atom(g)};
      row.unique_negative = row.valuation < 0 && negative_count(pool, p) == 1;
      report.passed = report.passed && row.unique_negative && row.is_atom;
      report.generators.push_back(std::move(row));
    };
    add("a_" + std::to_string(n), fam->a[n], pa, fam->a);
    add("b_" + std::to_string(n), fam->b[n], pb, m.generators());
    add("c_" + std::to_string(n), fam->c[n], pc, m.generators());
  }
  return report;
}

}  // namespace pmonoid
