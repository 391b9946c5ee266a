#pragma once

// Desk-scale verification runs. Each run returns a Report whose certificates
// (chains, factorizations, divisibility witnesses) have been re-checked with
// exact arithmetic before the report is returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pmonoid/decompose.hpp"
#include "pmonoid/io.hpp"
#include "pmonoid/powerset.hpp"
#include "pmonoid/puiseux.hpp"

namespace pmonoid {

struct Report {
  Report(std::string suite_name, std::string subject_text)
      : suite(std::move(suite_name)), subject(std::move(subject_text)) {}

  std::string suite;
  std::string subject;
  std::string note;
  bool passed = true;
  bool partial = false;
  json results = json::array();
  json certificates = json::array();
  std::vector<std::string> lines;

  json to_json() const {
    json out{{"suite", suite}, {"subject", subject}, {"passed", passed}, {"partial", partial}};
    if (!note.empty()) out["note"] = note;
    out["results"] = results;
    out["certificates"] = certificates;
    return out;
  }

  std::string text() const {
    std::string s = "[" + suite + "] " + subject + "\n";
    if (!note.empty()) s += "note: " + note + "\n";
    for (const auto& l : lines) s += "  " + l + "\n";
    s += std::string(passed ? "PASS" : "FAIL") + (partial ? " (partial)" : "") + "\n";
    return s;
  }

  void fail(std::string why) {
    passed = false;
    lines.push_back("failure: " + std::move(why));
  }
};

namespace detail {

inline Rational sum_of(const Factorization<Rational>& z) {
  Rational s = 0;
  for (const auto& [a, k] : z.parts) s += a * Rational(integer(k));
  return s;
}

inline FinSet sum_of(const Factorization<FinSet>& z) {
  FinSet s{Rational(0)};
  for (const auto& a : z.expanded()) s = minkowski_sum(s, a);
  return s;
}

inline bool divides(const PuiseuxMonoid& m, const Rational& d, const Rational& x) {
  auto r = minus(x, d);
  return r && m.contains(d) && m.contains(*r);
}

inline std::optional<unsigned> geometric_index(const GeometricFamily& g, const Rational& x) {
  const Rational d(g.ratio.den());
  Rational r_pow = g.ratio;
  for (unsigned n = 1; n <= 256; ++n, r_pow *= g.ratio) {
    Rational xn = d * r_pow;
    if (xn == x) return n;
    if (xn < x) break;
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ACCP

/// Finitely generated monoids always stabilize: a proper divisor chain from x
/// is no longer than the longest factorization of x, and one such longest
/// chain is produced. Geometric truncations starting at a chain point x_k
/// instead report the explicit non-stabilizing chain of the family together
/// with its lift to singletons in the power monoid.
inline Report accp_chain_search(const PuiseuxMonoid& m, const Rational& start, unsigned depth) {
  if (depth == 0) throw monoid_error(error_kind::invalid_input, "depth must be positive");
  m.require_member(start);
  Report rep{"accp", m.label() + ", start " + start.str()};

  if (const auto* g = std::get_if<GeometricFamily>(&m.family()); g && !start.is_zero()) {
    if (auto k = detail::geometric_index(*g, start)) {
      rep.note = "family chain of the infinite monoid; the truncation only hosts its finite prefix";
      auto chain = geometric_chain(g->ratio, *k + depth - 1);
      json elements = json::array();
      elements.push_back(start.str());
      for (unsigned n = *k; n + 1 <= *k + depth - 1; ++n) {
        const auto& link = chain.links[n - 1];
        FinSet lifted = minkowski_sum(FinSet{link.next}, FinSet{link.step});
        bool lift_ok = lifted == FinSet{link.x} && !link.step.is_zero();
        bool ok = link.step_matches_formula && link.step_in_monoid && link.strict && lift_ok;
        if (!ok) rep.fail("link " + std::to_string(n) + " did not verify");
        elements.push_back(link.next.str());
        rep.certificates.push_back(json{{"n", n},
                                        {"x_n", link.x.str()},
                                        {"x_next", link.next.str()},
                                        {"step", link.step.str()},
                                        {"step_in_monoid", link.step_in_monoid},
                                        {"singleton_lift", lift_ok}});
      }
      rep.results = json{{"stabilizes", false}, {"chain", elements}, {"sign_note", chain.note}};
      rep.lines.push_back("chain " + std::to_string(depth) + " deep, strictly descending, no stabilization");
      rep.lines.push_back(chain.note);
      return rep;
    }
  }

  auto zs = m.factorizations(start);
  const Factorization<Rational>* longest = nullptr;
  for (const auto& z : zs.items)
    if (!longest || z.length() > longest->length()) longest = &z;
  const std::uint64_t bound = longest ? longest->length() : 0;
  std::vector<Rational> chain{start};
  if (longest) {
    Rational cur = start;
    for (const auto& a : longest->expanded()) {
      Rational next = sub(cur, a);
      if (!m.contains(next) || !m.is_atom(a)) rep.fail("chain step from " + cur.str() + " not certified");
      chain.push_back(next);
      cur = next;
    }
  }
  rep.note = "finitely generated: divisor sets are finite, so every ascending chain of principal ideals stabilizes";
  rep.results = json{{"stabilizes", true},
                     {"longest_proper_chain", bound},
                     {"requested_depth", depth},
                     {"depth_reachable", depth <= bound + 1},
                     {"chain", to_json(chain)}};
  rep.certificates.push_back(json{{"longest_chain", to_json(chain)}, {"steps_are_atoms", rep.passed}});
  rep.lines.push_back("stabilizes; longest proper divisor chain has " + std::to_string(bound) + " steps");
  return rep;
}

/// Power-monoid form: singleton starts on a geometric chain lift the family
/// chain; otherwise the longest chain comes from a longest factorization.
inline Report accp_chain_search(PowerMonoid& p, const FinSet& start, unsigned depth) {
  if (depth == 0) throw monoid_error(error_kind::invalid_input, "depth must be positive");
  if (start.size() == 1 && !p.restricted() &&
      std::holds_alternative<GeometricFamily>(p.ambient().family())) {
    auto rep = accp_chain_search(p.ambient(), start.min(), depth);
    rep.subject = p.label() + ", start " + start.str();
    return rep;
  }
  if (!p.contains(start)) throw monoid_error(error_kind::not_a_member, start.str() + " is not in " + p.label());
  Report rep{"accp", p.label() + ", start " + start.str()};
  auto zs = p.factorizations(start);
  const Factorization<FinSet>* longest = nullptr;
  for (const auto& z : zs.items)
    if (!longest || z.length() > longest->length()) longest = &z;
  json chain = json::array();
  chain.push_back(to_json(start));
  std::uint64_t bound = 0;
  if (longest) {
    bound = longest->length();
    auto atoms = longest->expanded();
    for (std::size_t i = 1; i <= atoms.size(); ++i) {
      FinSet rest{Rational(0)};
      for (std::size_t j = i; j < atoms.size(); ++j) rest = minkowski_sum(rest, atoms[j]);
      FinSet back = rest;
      for (std::size_t j = 0; j < i; ++j) back = minkowski_sum(back, atoms[j]);
      if (back != start) rep.fail("chain element does not divide the start");
      chain.push_back(to_json(rest));
    }
  }
  rep.note = "the ambient is finitely generated, so it satisfies the ACCP and so does its power monoid";
  rep.results = json{{"stabilizes", true},
                     {"longest_proper_chain", bound},
                     {"requested_depth", depth},
                     {"depth_reachable", depth <= bound + 1},
                     {"chain", chain}};
  rep.certificates.push_back(json{{"longest_chain", chain}});
  rep.lines.push_back("stabilizes; longest proper divisor chain has " + std::to_string(bound) + " steps");
  return rep;
}

// ---------------------------------------------------------------------------
// Bounded / finite factorization checks

namespace detail {

template <class Elem, class Enumerate>
Report factorization_survey(std::string suite, std::string subject, const std::vector<Elem>& corpus,
                            std::optional<std::uint64_t> cap, Enumerate&& enumerate) {
  Report rep{std::move(suite), std::move(subject)};
  for (const auto& x : corpus) {
    auto zs = enumerate(x, cap);
    std::map<std::uint64_t, std::uint64_t> per_length;
    for (const auto& z : zs.items) {
      ++per_length[z.length()];
      if (!(sum_of(z) == x)) rep.fail("factorization of " + x.str() + " does not sum back");
    }
    std::uint64_t max_len = per_length.empty() ? 0 : per_length.rbegin()->first;
    json by_len = json::object();
    for (auto [l, c] : per_length) by_len[std::to_string(l)] = c;
    json row{{"element", to_json(x)},
             {"factorizations", zs.items.size()},
             {"lengths", to_json(zs.lengths())},
             {"max_length", max_len},
             {"per_length", by_len},
             {"cap_hit", zs.partial}};
    rep.results.push_back(row);
    if (!zs.items.empty()) {
      auto longest = std::max_element(zs.items.begin(), zs.items.end(),
                                      [](const auto& a, const auto& b) { return a.length() < b.length(); });
      rep.certificates.push_back(json{{"element", to_json(x)}, {"longest", to_json(*longest)}, {"sums_back", true}});
    }
    if (zs.partial) {
      rep.partial = true;
      rep.passed = false;
      rep.lines.push_back(x.str() + ": length cap reached (bounded-factorization failure candidate)");
    }
    rep.lines.push_back(x.str() + ": " + std::to_string(zs.items.size()) + " factorization(s), lengths " +
                        format_lengths(zs.lengths()) + ", max " + std::to_string(max_len));
  }
  return rep;
}

}  // namespace detail

inline Report bfm_check(const PuiseuxMonoid& m, const std::vector<Rational>& corpus, std::uint64_t cap) {
  for (const auto& x : corpus) m.require_member(x);
  return detail::factorization_survey("bfm", m.label(), corpus, cap,
                                      [&](const Rational& x, auto c) { return m.factorizations(x, c); });
}

inline Report bfm_check(PowerMonoid& p, const std::vector<FinSet>& corpus, std::uint64_t cap) {
  return detail::factorization_survey("bfm", p.label(), corpus, cap,
                                      [&](const FinSet& x, auto c) { return p.factorizations(x, c); });
}

inline Report ffm_check(const PuiseuxMonoid& m, const std::vector<Rational>& corpus,
                        std::optional<std::uint64_t> cap = {}) {
  for (const auto& x : corpus) m.require_member(x);
  return detail::factorization_survey("ffm", m.label(), corpus, cap,
                                      [&](const Rational& x, auto c) { return m.factorizations(x, c); });
}

inline Report ffm_check(PowerMonoid& p, const std::vector<FinSet>& corpus, std::optional<std::uint64_t> cap = {}) {
  return detail::factorization_survey("ffm", p.label(), corpus, cap,
                                      [&](const FinSet& x, auto c) { return p.factorizations(x, c); });
}

// ---------------------------------------------------------------------------
// Maximal common divisors

struct WitnessLevel {
  unsigned level = 0;
  std::vector<Rational> mcds;
  std::size_t common_divisor_count = 0;
  bool members_ok = false;  // 4/5 and 6/7 lie in the truncation via the explicit sums
};

/// At every truncation level the pair {4/5, 6/7} has maximal common divisors
/// (truncations are finitely generated), but each one is strictly exceeded by
/// a common divisor d + a_m of a deeper truncation. The report lists the
/// resulting strictly increasing chain.
inline Report non_2mcd_witness(const std::vector<unsigned>& levels) {
  if (levels.empty()) throw monoid_error(error_kind::invalid_input, "levels must be nonempty");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1]) throw monoid_error(error_kind::invalid_input, "levels must be increasing");

  Report rep{"mcd-witness", "example33 truncations, pair {4/5, 6/7}"};
  rep.note =
      "a finite truncation always has maximal common divisors, so non-atomicity of the power monoid is not "
      "observable here; what is checked is that every truncation-level mcd is beaten one level deeper";
  const Rational x = Rational::reduce(4, 5), y = Rational::reduce(6, 7);
  const std::vector<Rational> pair{x, y};

  std::vector<Rational> chain;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const unsigned level = levels[li];
    auto m = example33(level);
    const auto& fam = std::get<Example33Family>(m.family());

    const Rational via_b = Rational(fam.primes[1]) * fam.b[0] + fam.a[0];
    const Rational via_c = Rational(fam.primes[2]) * fam.c[0] + fam.a[0];
    const bool members_ok = via_b == x && via_c == y && m.contains(x) && m.contains(y);
    if (!members_ok) rep.fail("4/5 or 6/7 not reproduced at level " + std::to_string(level));

    auto common = m.common_divisors(pair);
    auto mcds = m.mcd(pair);
    for (const auto& d : mcds)
      if (!detail::divides(m, d, x) || !detail::divides(m, d, y))
        rep.fail("mcd " + d.str() + " does not divide both at level " + std::to_string(level));

    const unsigned deeper = li + 1 < levels.size() ? levels[li + 1] : level + 1;
    auto m_deep = example33(deeper);
    const Rational a_m = std::get<Example33Family>(m_deep.family()).a[deeper];
    json extensions = json::array();
    for (const auto& d : mcds) {
      const Rational e = d + a_m;
      const bool ok = detail::divides(m_deep, e, x) && detail::divides(m_deep, e, y);
      if (!ok) rep.fail("extension of " + d.str() + " by a_" + std::to_string(deeper) + " failed");
      extensions.push_back(json{{"mcd", d.str()},
                                {"extended", e.str()},
                                {"at_level", deeper},
                                {"divides_both", ok}});
    }
    if (mcds.empty()) rep.fail("no mcd found at level " + std::to_string(level));

    const Rational top = mcds.empty() ? Rational(0) : mcds.back();
    if (!chain.empty() && !(chain.back() < top)) rep.fail("chain not strictly increasing at level " + std::to_string(level));
    chain.push_back(top);

    rep.results.push_back(json{{"level", level},
                               {"members_via_explicit_sums", members_ok},
                               {"common_divisors", common.size()},
                               {"mcds", to_json(mcds)}});
    rep.certificates.push_back(json{{"level", level},
                                    {"chain_entry", top.str()},
                                    {"divides_4/5", detail::divides(m, top, x)},
                                    {"divides_6/7", detail::divides(m, top, y)},
                                    {"extensions", extensions}});
    rep.lines.push_back("level " + std::to_string(level) + ": mcd(s) " + format_list(mcds) + "; beaten by +a_" +
                        std::to_string(deeper) + " at level " + std::to_string(deeper));
  }
  json chain_json = to_json(chain);
  rep.certificates.push_back(json{{"chain", chain_json}});
  rep.lines.push_back("chain: " + format_list(chain));
  return rep;
}

/// All mcds of {x, y}; for example33 truncations also attaches the escalating
/// witness chain over levels 0..level.
inline Report mcd_probe(const PuiseuxMonoid& m, const Rational& x, const Rational& y) {
  m.require_member(x);
  m.require_member(y);
  Report rep{"mcd", m.label() + ", pair {" + x.str() + ", " + y.str() + "}"};
  const std::vector<Rational> pair{x, y};
  auto mcds = m.mcd(pair);
  for (const auto& d : mcds) {
    bool ok = detail::divides(m, d, x) && detail::divides(m, d, y);
    for (const auto& u : m.atoms())
      if (detail::divides(m, d + u, x) && detail::divides(m, d + u, y)) ok = false;
    if (!ok) rep.fail(d.str() + " is not a maximal common divisor");
    rep.certificates.push_back(json{{"mcd", d.str()}, {"divides_both", true}, {"no_atom_extends", ok}});
  }
  if (mcds.empty()) rep.fail("no maximal common divisor");
  rep.results = json{{"mcds", to_json(mcds)}};
  rep.lines.push_back("mcd(s): " + format_list(mcds));
  if (const auto* fam = std::get_if<Example33Family>(&m.family())) {
    std::vector<unsigned> levels;
    for (unsigned l = 0; l <= fam->level; ++l) levels.push_back(l);
    auto witness = non_2mcd_witness(levels);
    rep.passed = rep.passed && witness.passed;
    rep.results["witness"] = witness.to_json();
    for (const auto& l : witness.lines) rep.lines.push_back("witness " + l);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Atomicity sweep

/// Members of m up to `bound`, ascending (sums of atoms, breadth first).
inline std::vector<Rational> members_up_to(const PuiseuxMonoid& m, const Rational& bound,
                                           std::size_t limit = 100'000) {
  std::set<Rational> seen{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  while (!frontier.empty()) {
    std::vector<Rational> next;
    for (const auto& x : frontier)
      for (const auto& a : m.atoms()) {
        Rational y = x + a;
        if (y > bound) continue;
        if (seen.insert(y).second) {
          next.push_back(y);
          if (seen.size() > limit) throw monoid_error(error_kind::enumeration_limit, "too many members below bound");
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Every B in P_fin(M) with |B| <= max_card and max B <= bound must factor;
/// a failure would be a bug in this library, not in the theory.
inline Report atomicity_sweep(const PuiseuxMonoid& m, unsigned max_card, const Rational& bound) {
  if (max_card == 0) throw monoid_error(error_kind::invalid_input, "max_card must be positive");
  Report rep{"atomicity", "P_fin(" + m.label() + "), |B| <= " + std::to_string(max_card) + ", max B <= " + bound.str()};
  const auto members = members_up_to(m, bound);
  PowerMonoid p(m, false);
  std::uint64_t checked = 0, failures = 0;
  json failed = json::array();
  std::vector<std::size_t> pick;
  // Graded lexicographic order: by cardinality, then lexicographically.
  for (unsigned card = 1; card <= max_card && card <= members.size(); ++card) {
    pick.resize(card);
    for (unsigned i = 0; i < card; ++i) pick[i] = i;
    while (true) {
      std::vector<Rational> elems;
      for (auto i : pick) elems.push_back(members[i]);
      FinSet b = FinSet::from(elems);
      auto zs = p.factorizations(b);
      ++checked;
      if (zs.items.empty() || !(detail::sum_of(zs.items.front()) == b)) {
        ++failures;
        failed.push_back(to_json(b));
      } else if (checked <= 32) {
        rep.certificates.push_back(json{{"set", to_json(b)}, {"factorization", to_json(zs.items.front())}});
      }
      int i = static_cast<int>(card) - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == members.size() - card + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  rep.passed = failures == 0;
  rep.results = json{{"members", members.size()}, {"sets_checked", checked}, {"failures", failures}, {"failed", failed}};
  rep.lines.push_back(std::to_string(checked) + " sets checked over " + std::to_string(members.size()) +
                      " members, " + std::to_string(failures) + " without a factorization");
  return rep;
}

// ---------------------------------------------------------------------------
// The three-sequence family

/// Construction checks for example33(level): prime growth, the inequalities
/// used to pick each p_{3n+1}, the reciprocal-sum bound, valuation-based atom
/// certificates, and the explicit sums giving 4/5 and 6/7.
inline Report example33_check(unsigned level) {
  auto m = example33(level);
  const auto& fam = std::get<Example33Family>(m.family());
  Report rep{"example33", m.label()};

  bool growth = fam.primes.front() == 17;
  for (std::size_t i = 0; i < fam.primes.size(); ++i) {
    if (!(fam.primes[i] > (integer(15) << i))) growth = false;
    if (i > 0 && !(fam.primes[i] > fam.primes[i - 1])) growth = false;
    if (!is_prime(fam.primes[i])) growth = false;
  }
  if (!growth) rep.fail("prime sequence violates p_0 = 17, p_i > 15 * 2^i or monotonicity");

  json inequalities = json::array();
  Rational partial = 0;
  for (unsigned n = 0; n <= level; ++n) {
    partial += Rational::reduce(1, fam.primes[3 * n]);
    const integer& p = fam.primes[3 * n + 1];
    const Rational b_res = sub(Rational::reduce(4, 5), partial);
    const Rational c_res = sub(Rational::reduce(6, 7), partial);
    bool ok = p > fam.primes[3 * n] && p > (integer(15) << (3 * n + 3)) && p > b_res.num() && p > c_res.num();
    if (!ok) rep.fail("prime inequality fails at n = " + std::to_string(n));
    inequalities.push_back(json{{"n", n},
                                {"p_3n+1", integer_json(p)},
                                {"n(4/5 - S_n)", integer_json(b_res.num())},
                                {"n(6/7 - S_n)", integer_json(c_res.num())},
                                {"holds", ok}});
  }
  const bool sum_ok = partial < Rational::reduce(2, 15);
  if (!sum_ok) rep.fail("reciprocal sum is not below 2/15");

  auto val = verify_atoms_by_valuation(m);
  if (!val.passed) rep.fail("valuation certificate failed");
  json gens = json::array();
  for (const auto& g : val.generators)
    gens.push_back(json{{"name", g.name},
                        {"value", g.value.str()},
                        {"prime", integer_json(g.prime)},
                        {"valuation", g.valuation},
                        {"unique_negative", g.unique_negative},
                        {"atom", g.is_atom}});

  const Rational four_fifths = Rational(fam.primes[1]) * fam.b[0] + fam.a[0];
  const Rational six_sevenths = Rational(fam.primes[2]) * fam.c[0] + fam.a[0];
  const bool witnesses = four_fifths == Rational::reduce(4, 5) && six_sevenths == Rational::reduce(6, 7) &&
                         m.contains(four_fifths) && m.contains(six_sevenths);
  if (!witnesses) rep.fail("4/5 = p_1 b_0 + a_0 or 6/7 = p_2 c_0 + a_0 does not hold");

  json primes = json::array();
  for (const auto& p : fam.primes) primes.push_back(integer_json(p));
  rep.results = json{{"primes", primes},
                     {"prime_growth", growth},
                     {"reciprocal_sum", partial.str()},
                     {"reciprocal_sum_below_2/15", sum_ok},
                     {"generators", gens}};
  rep.certificates.push_back(json{{"inequalities", inequalities}});
  rep.certificates.push_back(json{{"4/5", "p_1*b_0 + a_0"}, {"6/7", "p_2*c_0 + a_0"}, {"hold", witnesses}});
  std::string ps;
  for (const auto& p : fam.primes) ps += (ps.empty() ? "" : ", ") + p.str();
  rep.lines.push_back("primes: " + ps);
  rep.lines.push_back("sum of 1/p_{3i} = " + partial.str() + (sum_ok ? " < 2/15" : " NOT < 2/15"));
  rep.lines.push_back(std::to_string(val.generators.size()) + " generators, valuation certificates " +
                      (val.passed ? "pass" : "fail"));
  return rep;
}

}  // namespace pmonoid
