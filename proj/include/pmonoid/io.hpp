#pragma once

// Text and JSON renderings shared by the laboratory reports and the CLI.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmonoid/decompose.hpp"
#include "pmonoid/factorization.hpp"
#include "pmonoid/numerical.hpp"
#include "pmonoid/powerset.hpp"
#include "pmonoid/puiseux.hpp"
#include "pmonoid/rational.hpp"

namespace pmonoid {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return q.str(); }

inline json to_json(const FinSet& s) {
  json out = json::array();
  for (const auto& x : s.elements()) out.push_back(x.str());
  return out;
}

inline json to_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

inline json integer_json(const integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const NumericalMonoid& n) {
  return json{{"generators", n.generators()}, {"frobenius", n.frobenius()}};
}

inline json family_json(const FamilyTag& tag) {
  if (const auto* g = std::get_if<GeometricFamily>(&tag))
    return json{{"kind", "geometric"}, {"ratio", g->ratio.str()}, {"level", g->level}};
  if (const auto* e = std::get_if<Example33Family>(&tag)) {
    json primes = json::array();
    for (const auto& p : e->primes) primes.push_back(integer_json(p));
    return json{{"kind", "example33"}, {"level", e->level}, {"primes", primes}};
  }
  return json{{"kind", "plain"}};
}

inline json to_json(const PuiseuxMonoid& m) {
  json underlying;
  json scaled = json::array();
  for (const auto& a : m.scaled_atoms()) scaled.push_back(integer_json(a));
  underlying["generators"] = scaled;
  if (const auto* n = m.numerical()) underlying["frobenius"] = n->frobenius();
  underlying["tabulated"] = m.numerical() != nullptr;
  return json{{"generators", to_json(m.generators())},
              {"atoms", to_json(m.atoms())},
              {"scale", m.scale().str()},
              {"underlying", underlying},
              {"family", family_json(m.family())}};
}

inline json to_json(const Factorization<Rational>& z) {
  json out = json::array();
  for (const auto& [a, k] : z.parts) out.push_back(json{{"atom", a.str()}, {"count", k}});
  return out;
}

/// Set-level factorizations are short; atoms are listed with repetition.
inline json to_json(const Factorization<FinSet>& z) {
  json out = json::array();
  for (const auto& a : z.expanded()) out.push_back(to_json(a));
  return out;
}

inline json to_json(const Decomposition& d) {
  return json{{"left", to_json(d.left)}, {"right", to_json(d.right)}, {"trivial", d.trivial}};
}

template <class T>
json to_json(const std::set<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

inline std::string format_lengths(const std::set<std::uint64_t>& ls) {
  std::string s = "{";
  bool first = true;
  for (auto l : ls) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(l);
  }
  return s + "}";
}

inline std::string format(const Factorization<Rational>& z) {
  if (z.parts.empty()) return "0";
  std::string s;
  constexpr std::uint64_t expand_below = 16;
  const bool expand = z.length() <= expand_below;
  for (const auto& [a, k] : z.parts) {
    if (expand) {
      for (std::uint64_t i = 0; i < k; ++i) s += (s.empty() ? "" : " + ") + a.str();
    } else {
      std::string atom = a.is_integer() ? a.str() : "(" + a.str() + ")";
      s += (s.empty() ? "" : " + ") + (k == 1 ? a.str() : std::to_string(k) + "*" + atom);
    }
  }
  return s;
}

inline std::string format(const Factorization<FinSet>& z) {
  if (z.parts.empty()) return "{0}";
  std::string s;
  for (const auto& a : z.expanded()) s += (s.empty() ? "" : " + ") + a.str();
  return s;
}

inline std::string format_list(const std::vector<Rational>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.str();
  return s;
}

/// "<2, 3>", "2,3", "<1/2, 1/3>": the angle brackets are optional.
inline std::vector<Rational> parse_generators(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '<') {
    if (text.back() != '>') throw monoid_error(error_kind::invalid_input, "unterminated generator list");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Rational> out;
  while (true) {
    auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    if (item.empty()) throw monoid_error(error_kind::invalid_input, "empty generator in list");
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

/// "geometric:r:N" or "example33:N"; a missing level falls back to
/// `default_level` when given.
inline PuiseuxMonoid parse_family(std::string_view spec, std::optional<unsigned> default_level = {}) {
  auto parse_level = [&](std::string_view s) -> unsigned {
    s = detail::trim(s);
    if (s.empty()) {
      if (default_level) return *default_level;
      throw monoid_error(error_kind::invalid_input, "family '" + std::string(spec) + "' needs a level");
    }
    auto v = detail::parse_natural(s, spec);
    if (v > 64) throw monoid_error(error_kind::invalid_input, "family level too large");
    return static_cast<unsigned>(v);
  };
  auto colon = spec.find(':');
  auto kind = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "geometric") {
    auto c2 = rest.find(':');
    if (rest.empty()) throw monoid_error(error_kind::invalid_input, "geometric family needs a ratio");
    Rational r = parse_rational(rest.substr(0, c2));
    return geometric(r, parse_level(c2 == std::string_view::npos ? std::string_view{} : rest.substr(c2 + 1)));
  }
  if (kind == "example33") return example33(parse_level(rest));
  throw monoid_error(error_kind::invalid_input, "unknown family '" + std::string(kind) + "'");
}

}  // namespace pmonoid
