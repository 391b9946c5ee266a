#pragma once

// Command-line front end. Every verb parses its arguments, calls one library
// entry point and prints the result as text or JSON.

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmonoid/decompose.hpp"
#include "pmonoid/io.hpp"
#include "pmonoid/laboratory.hpp"
#include "pmonoid/powerset.hpp"
#include "pmonoid/puiseux.hpp"

namespace pmonoid::cli {

namespace detail {

struct Options {
  std::string monoid;
  std::string family;
  bool restricted = false;
  bool as_json = false;
  std::optional<std::uint64_t> max_length;
  std::vector<std::string> args;
  std::string suite;
  std::string family_spec;
  std::optional<unsigned> level;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PuiseuxMonoid resolve_monoid(const Options& o) {
  if (!o.monoid.empty() && !o.family.empty()) throw usage_error("--monoid and --family are mutually exclusive");
  if (!o.family.empty()) return parse_family(o.family);
  if (o.monoid.empty()) throw usage_error("a monoid is required: --monoid \"g1,g2,...\" or --family <spec>");
  return PuiseuxMonoid::from_generators(parse_generators(o.monoid));
}

inline void need_args(const Options& o, std::size_t lo, std::size_t hi = SIZE_MAX) {
  if (o.args.size() < lo || o.args.size() > hi)
    throw usage_error("wrong number of arguments (" + std::to_string(o.args.size()) + ")");
}

inline std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

inline std::vector<FinSet> finsets(const std::vector<std::string>& xs) {
  std::vector<FinSet> out;
  for (const auto& x : xs) out.push_back(parse_finset(x));
  return out;
}

inline bool looks_like_set(const std::string& s) {
  auto t = pmonoid::detail::trim(s);
  return !t.empty() && t.front() == '{';
}

inline unsigned small_natural(const std::string& s, std::string_view what) {
  auto v = pmonoid::detail::parse_natural(pmonoid::detail::trim(s), what);
  if (v > 1'000'000) throw monoid_error(error_kind::invalid_input, std::string(what) + " too large");
  return static_cast<unsigned>(v);
}

struct Output {
  json body = json::object();
  std::vector<std::string> text;
  bool partial = false;
};

inline Output element_verb(const std::string& verb, const Options& o) {
  auto m = resolve_monoid(o);
  Output out;
  out.body["monoid"] = m.label();
  if (verb == "atoms") {
    need_args(o, 0, 0);
    out.body["atoms"] = to_json(m.atoms());
    out.body["details"] = to_json(m);
    out.text.push_back("<" + format_list(m.atoms()) + ">");
    return out;
  }
  if (verb == "member") {
    need_args(o, 1);
    json rows = json::array();
    for (const auto& x : rationals(o.args)) {
      bool in = m.contains(x);
      rows.push_back(json{{"element", x.str()}, {"member", in}});
      out.text.push_back(o.args.size() == 1 ? (in ? "true" : "false") : x.str() + ": " + (in ? "true" : "false"));
    }
    out.body["results"] = rows;
    return out;
  }
  if (verb == "divisors") {
    need_args(o, 1, 1);
    auto ds = m.divisors(parse_rational(o.args[0]));
    out.body["element"] = parse_rational(o.args[0]).str();
    out.body["divisors"] = to_json(ds);
    out.text.push_back(format_list(ds));
    return out;
  }
  if (verb == "factorize") {
    need_args(o, 1, 1);
    const Rational x = parse_rational(o.args[0]);
    auto zs = m.factorizations(x, o.max_length);
    json items = json::array();
    for (const auto& z : zs.items) {
      items.push_back(to_json(z));
      out.text.push_back(format(z));
    }
    out.partial = zs.partial;
    out.body["element"] = x.str();
    out.body["factorizations"] = items;
    out.body["lengths"] = to_json(zs.lengths());
    return out;
  }
  if (verb == "lengths") {
    need_args(o, 1, 1);
    const Rational x = parse_rational(o.args[0]);
    auto ls = m.length_set(x);
    out.body["element"] = x.str();
    out.body["lengths"] = to_json(ls);
    out.text.push_back(format_lengths(ls));
    return out;
  }
  // mcd
  need_args(o, 1);
  auto xs = rationals(o.args);
  auto ds = m.mcd(xs);
  out.body["elements"] = to_json(xs);
  out.body["mcd"] = to_json(ds);
  out.text.push_back(format_list(ds));
  return out;
}

inline Output set_verb(const std::string& verb, const Options& o) {
  Output out;
  if (verb == "minkowski") {
    need_args(o, 1);
    auto sets = finsets(o.args);
    FinSet sum = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) sum = minkowski_sum(sum, sets[i]);
    out.body["sum"] = to_json(sum);
    out.text.push_back(sum.str());
    return out;
  }
  PowerMonoid p(resolve_monoid(o), o.restricted);
  out.body["monoid"] = p.label();
  need_args(o, 1, 1);
  const FinSet b = parse_finset(o.args[0]);
  out.body["set"] = to_json(b);
  if (verb == "decompose") {
    json rows = json::array();
    for (const auto& d : p.decompositions(b)) {
      rows.push_back(to_json(d));
      out.text.push_back(d.left.str() + " + " + d.right.str() + (d.trivial ? " (trivial)" : ""));
    }
    out.body["decompositions"] = rows;
  } else if (verb == "is-atom") {
    auto v = p.is_atom(b);
    out.body["atom"] = v.atom;
    out.body["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    std::string line = v.atom ? "true" : "false";
    if (v.witness) line += " (" + v.witness->left.str() + " + " + v.witness->right.str() + ")";
    out.text.push_back(line);
  } else if (verb == "factorize-set") {
    auto zs = p.factorizations(b, o.max_length);
    json items = json::array();
    for (const auto& z : zs.items) {
      items.push_back(to_json(z));
      out.text.push_back(format(z));
    }
    out.partial = zs.partial;
    out.body["factorizations"] = items;
    out.body["lengths"] = to_json(zs.lengths());
  } else if (verb == "lengths-set") {
    auto ls = p.length_set(b);
    out.body["lengths"] = to_json(ls);
    out.text.push_back(format_lengths(ls));
  } else {
    auto ds = p.divisor_closure(b);
    out.body["divisor_closure"] = to_json(ds);
    out.text.push_back(format_list(ds));
  }
  return out;
}

inline Output from_report(const Report& rep) {
  Output out;
  out.body = rep.to_json();
  out.partial = rep.partial;
  std::string t = rep.text();
  if (!t.empty() && t.back() == '\n') t.pop_back();
  out.text.push_back(t);
  return out;
}

inline Output verify_verb(const Options& o) {
  constexpr std::uint64_t default_bfm_cap = 1000;
  const std::string& suite = o.suite;
  if (suite == "example33") {
    need_args(o, 0, 1);
    unsigned level = o.args.empty() ? 2 : small_natural(o.args[0], "level");
    return from_report(example33_check(level));
  }
  if (suite == "mcd" && o.monoid.empty() && o.family.empty()) {
    need_args(o, 0, 1);
    unsigned top = o.args.empty() ? 2 : small_natural(o.args[0], "level");
    std::vector<unsigned> levels;
    for (unsigned l = 0; l <= top; ++l) levels.push_back(l);
    return from_report(non_2mcd_witness(levels));
  }
  auto m = resolve_monoid(o);
  if (suite == "accp") {
    need_args(o, 1, 2);
    unsigned depth = o.args.size() > 1 ? small_natural(o.args[1], "depth") : 10;
    if (looks_like_set(o.args[0])) {
      PowerMonoid p(m, o.restricted);
      return from_report(accp_chain_search(p, parse_finset(o.args[0]), depth));
    }
    return from_report(accp_chain_search(m, parse_rational(o.args[0]), depth));
  }
  if (suite == "bfm" || suite == "ffm") {
    need_args(o, 1);
    const bool sets = looks_like_set(o.args[0]);
    if (sets) {
      PowerMonoid p(m, o.restricted);
      auto corpus = finsets(o.args);
      return from_report(suite == "bfm" ? bfm_check(p, corpus, o.max_length.value_or(default_bfm_cap))
                                        : ffm_check(p, corpus, o.max_length));
    }
    auto corpus = rationals(o.args);
    return from_report(suite == "bfm" ? bfm_check(m, corpus, o.max_length.value_or(default_bfm_cap))
                                      : ffm_check(m, corpus, o.max_length));
  }
  if (suite == "mcd") {
    need_args(o, 2, 2);
    return from_report(mcd_probe(m, parse_rational(o.args[0]), parse_rational(o.args[1])));
  }
  // atomicity
  need_args(o, 2, 2);
  return from_report(atomicity_sweep(m, small_natural(o.args[0], "max_card"), parse_rational(o.args[1])));
}

inline Output family_verb(const Options& o) {
  auto m = parse_family(o.family_spec, o.level);
  Output out;
  out.body["label"] = m.label();
  out.body["monoid"] = to_json(m);
  out.text.push_back(m.label());
  out.text.push_back(m.str());
  if (const auto* e = std::get_if<Example33Family>(&m.family())) {
    std::string ps;
    for (const auto& p : e->primes) ps += (ps.empty() ? "" : ", ") + p.str();
    out.text.push_back("primes: " + ps);
  }
  return out;
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 on domain errors and 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Finitely generated Puiseux monoids and their finitary power monoids", "pmonoid"};
  app.require_subcommand(1);

  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--monoid", o.monoid, "generators, e.g. \"2,3\" or \"<1/2, 1/3>\"; \"1\" is N_0");
    sub->add_option("--family", o.family, "geometric:r:N or example33:N");
    sub->add_flag("--restricted", o.restricted, "use the restricted power monoid P_fin,0");
    sub->add_flag("--json", o.as_json, "emit JSON");
    sub->add_option("--max-length", o.max_length, "drop factorizations longer than K (marks output partial)");
  };

  const std::vector<std::pair<std::string, std::string>> element_verbs{
      {"atoms", "list the atoms"},
      {"member", "membership of one or more elements"},
      {"divisors", "all divisors of an element"},
      {"factorize", "all factorizations of an element"},
      {"lengths", "length set of an element"},
      {"mcd", "maximal common divisors of elements"}};
  const std::vector<std::pair<std::string, std::string>> set_verbs{
      {"minkowski", "Minkowski sum of sets"},
      {"decompose", "all two-set decompositions B = A + C"},
      {"is-atom", "whether a set is an atom of the power monoid"},
      {"factorize-set", "all factorizations of a set into atoms"},
      {"lengths-set", "length set of a set"},
      {"divisor-closure", "divisors in M of the elements of a set"}};

  std::string chosen;
  for (const auto& group : {element_verbs, set_verbs})
    for (const auto& [name, help] : group) {
      auto* sub = app.add_subcommand(name, help);
      add_globals(sub);
      sub->add_option("args", o.args, "elements or sets");
    }

  auto* verify = app.add_subcommand("verify", "laboratory reports");
  add_globals(verify);
  verify->add_option("suite", o.suite, "accp | bfm | ffm | mcd | atomicity | example33")
      ->required()
      ->check(CLI::IsMember({"accp", "bfm", "ffm", "mcd", "atomicity", "example33"}));
  verify->add_option("args", o.args, "suite arguments");

  auto* family = app.add_subcommand("family", "construct a family truncation");
  family->add_option("spec", o.family_spec, "geometric:r[:N] or example33[:N]")->required();
  family->add_option("--level", o.level, "truncation level when the spec omits one");
  family->add_flag("--json", o.as_json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    detail::Output result;
    if (verb == "verify")
      result = detail::verify_verb(o);
    else if (verb == "family")
      result = detail::family_verb(o);
    else if (std::any_of(element_verbs.begin(), element_verbs.end(), [&](const auto& v) { return v.first == verb; }))
      result = detail::element_verb(verb, o);
    else
      result = detail::set_verb(verb, o);

    if (o.as_json) {
      json doc{{"command", verb}, {"partial", result.partial}};
      for (auto it = result.body.begin(); it != result.body.end(); ++it)
        if (it.key() != "partial") doc[it.key()] = it.value();
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& line : result.text) out << line << "\n";
      if (result.partial) out << "(partial: length cap reached)\n";
    }
    if (verb == "verify" && !result.body.value("passed", true)) return 1;
    return 0;
  } catch (const detail::usage_error& e) {
    err << "usage error: " << e.what() << "\n" << app.get_subcommand(verb)->help();
    return 2;
  } catch (const monoid_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pmonoid::cli
