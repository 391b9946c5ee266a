#pragma once

// Minkowski-sum decomposition over an ambient monoid: all splits B = A + C,
// atom tests in P_fin(M) and P_fin,0(M), and full factorization enumeration.
//
// The search works on sorted vectors of ambient values. When the ambient
// Puiseux monoid has a tabulated numerical monoid, sets are scaled to 64-bit
// integers first and everything runs on integers; otherwise exact rationals.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pmonoid/error.hpp"
#include "pmonoid/factorization.hpp"
#include "pmonoid/numerical.hpp"
#include "pmonoid/powerset.hpp"
#include "pmonoid/puiseux.hpp"

namespace pmonoid {

namespace detail {

struct IntegerAmbient {
  using value_type = std::int64_t;
  const NumericalMonoid* n;

  bool contains(value_type x) const { return n->contains(x); }
  bool is_atom(value_type x) const { return std::binary_search(n->atoms().begin(), n->atoms().end(), x); }
  std::vector<value_type> divisors(value_type x) const { return n->divisors(x); }
  std::vector<value_type> common_divisors(const std::vector<value_type>& xs) const {
    auto common = n->divisors(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      auto d = n->divisors(xs[i]);
      std::vector<value_type> next;
      std::set_intersection(common.begin(), common.end(), d.begin(), d.end(), std::back_inserter(next));
      common = std::move(next);
    }
    return common;
  }
  FactorizationSet<value_type> factorizations(value_type x, std::optional<std::uint64_t> cap) const {
    return n->factorizations(x, cap);
  }
  static value_type diff(value_type a, value_type b) { return a - b; }
};

struct RationalAmbient {
  using value_type = Rational;
  const PuiseuxMonoid* m;

  bool contains(const Rational& x) const { return m->contains(x); }
  bool is_atom(const Rational& x) const { return m->is_atom(x); }
  std::vector<Rational> divisors(const Rational& x) const { return m->divisors(x); }
  std::vector<Rational> common_divisors(const std::vector<Rational>& xs) const { return m->common_divisors(xs); }
  FactorizationSet<Rational> factorizations(const Rational& x, std::optional<std::uint64_t> cap) const {
    return m->factorizations(x, cap);
  }
  static Rational diff(const Rational& a, const Rational& b) { return sub(a, b); }
};

}  // namespace detail

/// Decomposition machinery for one ambient in one mode (restricted or not).
/// Atom verdicts and set-level factorizations are memoized per instance, so
/// a single engine should be reused across a corpus.
template <class Ambient>
class SumsetEngine {
 public:
  using T = typename Ambient::value_type;
  using Set = std::vector<T>;
  using Multiset = std::vector<Set>;  // sorted

  SumsetEngine(Ambient ambient, bool restricted) : amb_(std::move(ambient)), restricted_(restricted) {}

  bool restricted() const noexcept { return restricted_; }

  /// Calls f(A, C) for every A + C = B with A, C over the ambient (and both
  /// containing 0 in restricted mode). Each unordered pair is reported at least
  /// once; pairs may repeat in either orientation. Stops when f returns false.
  template <class F>
  bool for_each_decomposition(const Set& b, F&& f) const {
    const std::size_t n = b.size();
    if (n > 63) throw monoid_error(error_kind::unsupported_ambient, "sets larger than 63 elements");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const T& lo = b.front();

    std::vector<T> left_mins;
    if (restricted_) {
      if (!(lo == T{})) return true;
      left_mins.push_back(T{});
    } else {
      left_mins = amb_.divisors(lo);
    }

    std::vector<T> shifted(n), cof(n);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    std::vector<std::size_t> cand;
    std::vector<std::uint64_t> cover;
    for (const T& min_a : left_mins) {
      const T min_c = Ambient::diff(lo, min_a);
      std::uint64_t pool = 0;
      for (std::size_t i = 0; i < n; ++i) {
        shifted[i] = Ambient::diff(b[i], min_c);
        if (amb_.contains(shifted[i])) pool |= std::uint64_t{1} << i;
      }
      std::vector<std::size_t> cofactors;
      for (std::size_t j = 0; j < n; ++j) {
        cof[j] = Ambient::diff(b[j], min_a);
        if (j == 0 || amb_.contains(cof[j])) cofactors.push_back(j);
      }
      // index[i][j]: position of shifted[i] + cof[j] in b, or -1.
      for (std::size_t i = 0; i < n; ++i) {
        if (!(pool >> i & 1)) continue;
        for (std::size_t j : cofactors) {
          T v = shifted[i] + cof[j];
          auto it = std::lower_bound(b.begin(), b.end(), v);
          index[i][j] = (it != b.end() && *it == v) ? static_cast<int>(it - b.begin()) : -1;
        }
      }

      const std::uint64_t rest = pool & ~std::uint64_t{1};
      for (std::uint64_t sub_mask = rest;; sub_mask = (sub_mask - 1) & rest) {
        const std::uint64_t a_mask = sub_mask | 1;
        cand.clear();
        cover.clear();
        std::uint64_t reach = 0;
        for (std::size_t j : cofactors) {
          std::uint64_t cv = 0;
          bool ok = true;
          for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(a_mask >> i & 1)) continue;
            int k = index[i][j];
            if (k < 0)
              ok = false;
            else
              cv |= std::uint64_t{1} << k;
          }
          if (!ok) continue;
          cand.push_back(j);
          cover.push_back(cv);
          reach |= cv;
        }
        if (reach == full) {
          Set a;
          for (std::size_t i = 0; i < n; ++i)
            if (a_mask >> i & 1) a.push_back(shifted[i]);
          std::vector<std::uint64_t> suffix(cand.size() + 1, 0);
          for (std::size_t k = cand.size(); k-- > 0;) suffix[k] = suffix[k + 1] | cover[k];
          std::vector<std::size_t> chosen{0};
          if (!covers(1, cover[0], full, cand, cover, suffix, chosen, cof, a, f)) return false;
        }
        if (sub_mask == 0) break;
      }
    }
    return true;
  }

  bool is_identity(const Set& s) const { return s.size() == 1 && s.front() == T{}; }

  /// A nontrivial split of b, if any (b itself must not be the identity).
  std::optional<std::pair<Set, Set>> split(const Set& b) const {
    std::optional<std::pair<Set, Set>> found;
    for_each_decomposition(b, [&](const Set& a, const Set& c) {
      if (is_identity(a) || is_identity(c)) return true;
      found.emplace(a, c);
      return false;
    });
    return found;
  }

  bool is_atom(const Set& b) {
    if (is_identity(b)) return false;
    if (!restricted_ && b.size() == 1) return amb_.is_atom(b.front());
    if (auto it = atom_memo_.find(b); it != atom_memo_.end()) return it->second;
    bool atom = !split(b).has_value();
    atom_memo_.emplace(b, atom);
    return atom;
  }

  /// Factorizations of b into atoms of size >= 2 only (every atom in
  /// restricted mode). Each non-singleton summand grows the size, which bounds the depth by
  /// |b| - 1.
  const std::vector<Multiset>& setwise_factorizations(const Set& b) {
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
    std::set<Multiset> acc;
    if (is_identity(b)) {
      acc.insert(Multiset{});
    } else if (b.size() > 1) {
      auto consider = [&](const Set& x, const Set& y) {
        if (x.size() < 2 || !is_atom(x)) return;
        if (y.size() == 1 && !is_identity(y)) return;
        for (const auto& z : setwise_factorizations(y)) {
          Multiset w = z;
          w.insert(std::upper_bound(w.begin(), w.end(), x), x);
          acc.insert(std::move(w));
        }
      };
      std::vector<std::pair<Set, Set>> splits;
      for_each_decomposition(b, [&](const Set& a, const Set& c) {
        splits.emplace_back(a, c);
        return true;
      });
      for (const auto& [a, c] : splits) {
        consider(a, c);
        consider(c, a);
      }
    }
    return memo_.emplace(b, std::vector<Multiset>(acc.begin(), acc.end())).first->second;
  }

  /// Every factorization of b, singleton atoms included (unrestricted mode):
  /// b = {s} + (b - s) for a common divisor s, with s factored in the ambient
  /// and b - s factored into non-singleton atoms.
  FactorizationSet<Set> factorizations(const Set& b, std::optional<std::uint64_t> cap) {
    std::set<Factorization<Set>> acc;
    bool partial = false;
    auto admit = [&](std::vector<Set> atoms) {
      if (cap && atoms.size() > *cap) {
        partial = true;
        return;
      }
      acc.insert(Factorization<Set>::from_atoms(std::move(atoms)));
    };
    if (restricted_) {
      for (const auto& z : setwise_factorizations(b)) admit(z);
    } else {
      for (const T& s : amb_.common_divisors(b)) {
        Set rest;
        for (const auto& x : b) rest.push_back(Ambient::diff(x, s));
        const auto& tails = setwise_factorizations(rest);
        if (tails.empty()) continue;
        auto heads = amb_.factorizations(s, cap);
        partial = partial || heads.partial;
        for (const auto& h : heads.items) {
          std::vector<Set> singles;
          for (const auto& a : h.expanded()) singles.push_back(Set{a});
          for (const auto& t : tails) {
            std::vector<Set> all = singles;
            all.insert(all.end(), t.begin(), t.end());
            admit(std::move(all));
          }
        }
      }
    }
    return {std::vector<Factorization<Set>>(acc.begin(), acc.end()), partial};
  }

  const Ambient& ambient() const noexcept { return amb_; }

 private:
  template <class F>
  bool covers(std::size_t k, std::uint64_t cur, std::uint64_t full, const std::vector<std::size_t>& cand,
              const std::vector<std::uint64_t>& cover, const std::vector<std::uint64_t>& suffix,
              std::vector<std::size_t>& chosen, const std::vector<T>& cof, const Set& a, F& f) const {
    if ((cur | suffix[k]) != full) return true;
    if (k == cand.size()) {
      Set c;
      for (std::size_t idx : chosen) c.push_back(cof[cand[idx]]);
      return f(a, c);
    }
    chosen.push_back(k);
    if (!covers(k + 1, cur | cover[k], full, cand, cover, suffix, chosen, cof, a, f)) return false;
    chosen.pop_back();
    return covers(k + 1, cur, full, cand, cover, suffix, chosen, cof, a, f);
  }

  Ambient amb_;
  bool restricted_;
  std::map<Set, bool> atom_memo_;
  std::map<Set, std::vector<Multiset>> memo_;
};

// ---------------------------------------------------------------------------

/// An unordered pair {left, right} with left <= right.
struct Decomposition {
  FinSet left;
  FinSet right;
  bool trivial = false;

  static Decomposition make(FinSet a, FinSet c) {
    if (c < a) std::swap(a, c);
    bool t = a.is_identity() || c.is_identity();
    return {std::move(a), std::move(c), t};
  }

  friend bool operator==(const Decomposition& x, const Decomposition& y) {
    return x.left == y.left && x.right == y.right;
  }
  friend auto operator<=>(const Decomposition& x, const Decomposition& y) {
    if (auto c = x.left <=> y.left; c != 0) return c;
    return x.right <=> y.right;
  }
};

struct AtomVerdict {
  bool atom = false;
  std::optional<Decomposition> witness;  // set when not an atom and B is not the identity
};

/// Handle on P_fin(M) or P_fin,0(M). Keeps the search memo tables, so reuse
/// one handle across many queries. Not safe for concurrent use.
class PowerMonoid {
 public:
  PowerMonoid(PuiseuxMonoid ambient, bool restricted)
      : ambient_(std::move(ambient)), restricted_(restricted) {
    if (ambient_.numerical())
      engine_.template emplace<IntEngine>(detail::IntegerAmbient{ambient_.numerical()}, restricted_);
    else
      engine_.template emplace<RatEngine>(detail::RationalAmbient{&ambient_}, restricted_);
  }

  PowerMonoid(const PowerMonoid& o) : PowerMonoid(o.ambient_, o.restricted_) {}
  PowerMonoid& operator=(const PowerMonoid&) = delete;

  const PuiseuxMonoid& ambient() const noexcept { return ambient_; }
  bool restricted() const noexcept { return restricted_; }

  bool contains(const FinSet& s) const { return in_power_monoid(s, ambient_, restricted_); }

  std::vector<Decomposition> decompositions(const FinSet& b) {
    validate(b);
    std::set<Decomposition> out;
    visit([&](auto& eng) {
      eng.for_each_decomposition(to_engine(eng, b), [&](const auto& a, const auto& c) {
        out.insert(Decomposition::make(from_engine(a), from_engine(c)));
        return true;
      });
    });
    return {out.begin(), out.end()};
  }

  AtomVerdict is_atom(const FinSet& b) {
    validate(b);
    AtomVerdict v;
    if (b.is_identity()) return v;
    visit([&](auto& eng) {
      auto s = to_engine(eng, b);
      v.atom = eng.is_atom(s);
      if (v.atom) return;
      if (!restricted_ && b.size() == 1) {
        // Singleton non-atom: split off any proper nonzero divisor in M.
        for (const auto& d : ambient_.divisors(b.min()))
          if (!d.is_zero() && d != b.min()) {
            v.witness = Decomposition::make(FinSet{d}, FinSet{sub(b.min(), d)});
            break;
          }
        return;
      }
      if (auto w = eng.split(s)) v.witness = Decomposition::make(from_engine(w->first), from_engine(w->second));
    });
    return v;
  }

  FactorizationSet<FinSet> factorizations(const FinSet& b, std::optional<std::uint64_t> max_length = {}) {
    validate(b);
    FactorizationSet<FinSet> out;
    visit([&](auto& eng) {
      auto zs = eng.factorizations(to_engine(eng, b), max_length);
      out.partial = zs.partial;
      for (const auto& z : zs.items) {
        Factorization<FinSet> w;
        for (const auto& [a, k] : z.parts) w.parts.emplace_back(from_engine(a), k);
        out.items.push_back(std::move(w));
      }
    });
    std::sort(out.items.begin(), out.items.end());
    return out;
  }

  std::set<std::uint64_t> length_set(const FinSet& b) { return factorizations(b).lengths(); }

  /// {c in M : c divides some b in B}, ascending.
  std::vector<Rational> divisor_closure(const FinSet& b) const {
    for (const auto& x : b.elements()) ambient_.require_member(x);
    std::set<Rational> out;
    for (const auto& x : b.elements())
      for (auto& d : ambient_.divisors(x)) out.insert(std::move(d));
    return {out.begin(), out.end()};
  }

  std::string label() const {
    return std::string(restricted_ ? "P_fin,0(" : "P_fin(") + ambient_.label() + ")";
  }

 private:
  using IntEngine = SumsetEngine<detail::IntegerAmbient>;
  using RatEngine = SumsetEngine<detail::RationalAmbient>;

  template <class F>
  void visit(F&& f) {
    std::visit(
        [&](auto& e) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(e)>, std::monostate>) f(e);
        },
        engine_);
  }

  void validate(const FinSet& b) const {
    if (restricted_ && !b.is_restricted())
      throw monoid_error(error_kind::invalid_input, b.str() + " does not contain 0 (restricted power monoid)");
    for (const auto& x : b.elements()) ambient_.require_member(x);
  }

  std::vector<std::int64_t> to_engine(IntEngine&, const FinSet& b) const {
    std::vector<std::int64_t> out;
    for (const auto& x : b.elements()) out.push_back(static_cast<std::int64_t>((x * ambient_.scale()).num()));
    return out;
  }
  std::vector<Rational> to_engine(RatEngine&, const FinSet& b) const { return b.elements(); }

  FinSet from_engine(const std::vector<std::int64_t>& s) const {
    std::vector<Rational> out;
    for (auto x : s) out.push_back(Rational(integer(x)) / ambient_.scale());
    return FinSet::from(std::move(out));
  }
  FinSet from_engine(const std::vector<Rational>& s) const { return FinSet::from(s); }

  PuiseuxMonoid ambient_;
  bool restricted_;
  std::variant<std::monostate, IntEngine, RatEngine> engine_;
};

// Free-function forms; each builds a fresh handle.

inline std::vector<Decomposition> decompositions(const FinSet& b, const PuiseuxMonoid& m, bool restricted = false) {
  return PowerMonoid(m, restricted).decompositions(b);
}

inline AtomVerdict is_atom_pfin(const FinSet& b, const PuiseuxMonoid& m, bool restricted) {
  return PowerMonoid(m, restricted).is_atom(b);
}

inline FactorizationSet<FinSet> pfin_factorizations(const FinSet& b, const PuiseuxMonoid& m, bool restricted,
                                                    std::optional<std::uint64_t> max_length = {}) {
  return PowerMonoid(m, restricted).factorizations(b, max_length);
}

inline std::set<std::uint64_t> pfin_length_set(const FinSet& b, const PuiseuxMonoid& m, bool restricted) {
  return PowerMonoid(m, restricted).length_set(b);
}

inline std::vector<Rational> divisor_closure(const FinSet& b, const PuiseuxMonoid& m) {
  return PowerMonoid(m, false).divisor_closure(b);
}

}  // namespace pmonoid
