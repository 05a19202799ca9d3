#ifndef FROBKIT_PROBLEM_HPP
#define FROBKIT_PROBLEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/json_report.hpp"
#include "frobkit/parse.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

/// One batch problem: header lines (`p=`, `vars=` or `semigroup`), named
/// entities (`ideal NAME = f, g`, `poly NAME = f`), and a single final
/// `cmd NAME args...`. Lines starting with `#` are comments.
struct ProblemSpec {
  std::optional<std::uint32_t> p;
  std::vector<std::string> vars;
  std::vector<std::uint64_t> semigroup_gens;
  std::optional<Ring> ring;
  std::optional<NumericalSemigroup> semigroup;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::string command;
  std::vector<std::string> positional;            // entity names
  std::map<std::string, std::string> params;      // key=value arguments
  // Raw text of entity definitions, preserved for report embedding.
  std::map<std::string, std::vector<std::string>> ideal_texts;
  std::map<std::string, std::string> poly_texts;
};

struct RunOptions {
  MonomialOrder order;
  int json_indent = 2;
  GroebnerLimits limits = default_groebner_limits();
  std::optional<std::uint32_t> default_emax;
};

struct RunResult {
  json document;
  int exit_code = 0;  // 0 computed, 1 inconclusive, 2 input/resource error
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int brace_depth = 0;
  for (char c : s) {
    if (c == '{') ++brace_depth;
    if (c == '}') --brace_depth;
    if (c == sep && brace_depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, int line,
                                const std::string& what) {
  if (s.empty()) throw ParseError("expected integer for " + what, line, 1);
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw ParseError("malformed integer for " + what + ": '" + s + "'",
                       line, 1);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline ProblemSpec parse_problem(const std::string& text,
                                 const MonomialOrder& order = MonomialOrder{}) {
  ProblemSpec spec;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_cmd = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (saw_cmd)
      throw ParseError("content after cmd line", lineno, 1);

    if (line.rfind("p=", 0) == 0) {
      std::uint64_t p = detail::parse_uint(detail::trim(line.substr(2)),
                                           lineno, "p");
      if (!PrimeField::is_prime(p))
        throw ParseError("p must be prime, got " + std::to_string(p), lineno,
                         1);
      spec.p = static_cast<std::uint32_t>(p);
      continue;
    }
    if (line.rfind("vars=", 0) == 0) {
      for (auto& v : detail::split(line.substr(5), ',')) {
        if (v.empty()) throw ParseError("empty variable name", lineno, 1);
        spec.vars.push_back(v);
      }
      continue;
    }
    if (line.rfind("semigroup", 0) == 0 &&
        (line.size() == 9 || line[9] == ' ' || line[9] == '\t')) {
      for (auto& v : detail::split(detail::trim(line.substr(9)), ','))
        spec.semigroup_gens.push_back(
            detail::parse_uint(v, lineno, "semigroup generator"));
      try {
        spec.semigroup = NumericalSemigroup(spec.semigroup_gens);
      } catch (const InvalidInputError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      continue;
    }
    if (line.rfind("ideal ", 0) == 0 || line.rfind("poly ", 0) == 0) {
      bool is_ideal = line[0] == 'i';
      std::string rest = detail::trim(line.substr(is_ideal ? 6 : 5));
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected '=' in definition", lineno, 1);
      std::string name = detail::trim(rest.substr(0, eq));
      std::string body = detail::trim(rest.substr(eq + 1));
      if (name.empty()) throw ParseError("missing name", lineno, 1);
      if (!spec.ring) {
        if (!spec.p)
          throw ParseError("p must be set before definitions", lineno, 1);
        if (spec.vars.empty())
          throw ParseError("vars must be set before definitions", lineno, 1);
        spec.ring = Ring(*spec.p, spec.vars, order);
      }
      if (is_ideal) {
        std::vector<Polynomial> gens;
        std::vector<std::string> texts;
        for (auto& part : detail::split(body, ',')) {
          gens.push_back(parse_polynomial(*spec.ring, part, lineno));
          texts.push_back(part);
        }
        spec.ideals.emplace(name, Ideal(*spec.ring, std::move(gens)));
        spec.ideal_texts.emplace(name, std::move(texts));
      } else {
        spec.polys.emplace(name, parse_polynomial(*spec.ring, body, lineno));
        spec.poly_texts.emplace(name, body);
      }
      continue;
    }
    if (line.rfind("cmd ", 0) == 0) {
      std::istringstream args(line.substr(4));
      std::string tok;
      args >> spec.command;
      if (spec.command.empty())
        throw ParseError("missing command name", lineno, 1);
      while (args >> tok) {
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
          spec.positional.push_back(tok);
        else
          spec.params[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
      saw_cmd = true;
      continue;
    }
    throw ParseError("unrecognized line: '" + line + "'", lineno, 1);
  }
  if (!saw_cmd) throw ParseError("missing cmd line", lineno, 1);
  return spec;
}

namespace detail {

inline json input_json(const ProblemSpec& spec, const RunOptions& opts) {
  json in;
  if (spec.p) in["p"] = *spec.p;
  if (!spec.vars.empty()) in["vars"] = spec.vars;
  if (!spec.semigroup_gens.empty()) in["semigroup"] = spec.semigroup_gens;
  json ideals(json::value_t::object);
  for (const auto& [name, texts] : spec.ideal_texts) ideals[name] = texts;
  json polys(json::value_t::object);
  for (const auto& [name, text] : spec.poly_texts) polys[name] = text;
  if (!spec.ideal_texts.empty()) in["ideals"] = ideals;
  if (!spec.poly_texts.empty()) in["polys"] = polys;
  in["order"] =
      opts.order.kind() == OrderKind::grevlex ? "grevlex" : "lex";
  in["spair_cap"] = opts.limits.spair_cap;
  in["degree_cap"] = opts.limits.degree_cap;
  json params(json::value_t::object);
  for (const auto& [k, v] : spec.params) params[k] = v;
  in["params"] = params;
  return in;
}

inline const Ideal& named_ideal(const ProblemSpec& spec) {
  if (spec.positional.size() != 1)
    throw InvalidInputError("command expects exactly one ideal name");
  auto it = spec.ideals.find(spec.positional[0]);
  if (it == spec.ideals.end())
    throw InvalidInputError("undefined ideal '" + spec.positional[0] + "'");
  return it->second;
}

inline const Polynomial& named_poly(const ProblemSpec& spec) {
  if (spec.positional.size() != 1)
    throw InvalidInputError("command expects exactly one polynomial name");
  auto it = spec.polys.find(spec.positional[0]);
  if (it == spec.polys.end())
    throw InvalidInputError("undefined polynomial '" + spec.positional[0] +
                            "'");
  return it->second;
}

inline std::string require_param(const ProblemSpec& spec,
                                 const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw InvalidInputError("missing parameter " + key + "=");
  return it->second;
}

inline std::uint32_t uint_param(const ProblemSpec& spec, const std::string& key,
                                std::optional<std::uint32_t> fallback = {}) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    if (fallback) return *fallback;
    throw InvalidInputError("missing parameter " + key + "=");
  }
  return static_cast<std::uint32_t>(parse_uint(it->second, 0, key));
}

inline std::vector<std::int64_t> parse_brace_list(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw InvalidInputError("expected brace list like {0,1}: " + s);
  std::vector<std::int64_t> out;
  for (auto& part : split(s.substr(1, s.size() - 2), ',')) {
    if (part.empty()) throw InvalidInputError("empty entry in brace list");
    bool neg = part[0] == '-';
    std::uint64_t v = parse_uint(neg ? part.substr(1) : part, 0, "list entry");
    out.push_back(neg ? -static_cast<std::int64_t>(v)
                      : static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace detail

/// Dispatches a parsed problem to the library and assembles the JSON report.
/// Every report embeds the input and the horizon/resolution parameters used.
inline RunResult run_problem(const ProblemSpec& spec, const RunOptions& opts) {
  json doc;
  doc["command"] = spec.command;
  doc["input"] = detail::input_json(spec, opts);
  int code = 0;

  const std::string& cmd = spec.command;
  TestIdealOptions tau_opts;
  tau_opts.limits = opts.limits;

  if (cmd == "frob-root") {
    const Ideal& a = detail::named_ideal(spec);
    std::uint32_t e = detail::uint_param(spec, "e");
    doc["result"] = to_json(canonical_form(frobenius_root(a, e), opts.limits));
  } else if (cmd == "chain") {
    const Polynomial& x = detail::named_poly(spec);
    std::uint32_t emax = detail::uint_param(spec, "emax", opts.default_emax);
    FrobeniusChainReport rep = descending_chain(x, emax, opts.limits);
    doc["result"] = to_json(rep);
    if (!rep.stabilization_index) {
      doc["status"] = "unstabilized";
      code = 1;
    }
  } else if (cmd == "delta-cert") {
    const Polynomial& x = detail::named_poly(spec);
    std::uint32_t e = detail::uint_param(spec, "e");
    auto cert = construct_delta(x, e, opts.limits);
    doc["result"]["found"] = cert.has_value();
    if (cert) {
      doc["result"]["certificate"] = to_json(*cert);
      doc["result"]["verified"] = verify_delta(*cert);
    }
  } else if (cmd == "fpure-pair") {
    const Polynomial& x = detail::named_poly(spec);
    std::uint32_t e = detail::uint_param(spec, "e");
    doc["result"]["fpure"] = is_fpure_pair(x, e, opts.limits);
  } else if (cmd == "generation") {
    const Polynomial& x = detail::named_poly(spec);
    std::uint32_t emax = detail::uint_param(spec, "emax", opts.default_emax);
    GenerationReport rep = generation_report(x, emax, opts.limits);
    doc["result"] = to_json(rep);
    if (!rep.generated) {
      doc["status"] = "inconclusive";
      code = 1;
    }
  } else if (cmd == "test-ideal") {
    const Ideal& a = detail::named_ideal(spec);
    Rational t = parse_rational(detail::require_param(spec, "t"));
    doc["result"] = to_json(test_ideal(a, t, tau_opts));
  } else if (cmd == "nu") {
    const Ideal& a = detail::named_ideal(spec);
    std::uint32_t e = detail::uint_param(spec, "e");
    doc["result"]["nu"] = nu(a, e, opts.limits);
  } else if (cmd == "fpt") {
    const Ideal& a = detail::named_ideal(spec);
    std::uint32_t emax = detail::uint_param(spec, "emax", opts.default_emax);
    auto [lo, hi] = fpt_interval(a, emax, opts.limits);
    doc["result"]["lower"] = lo.str();
    doc["result"]["upper"] = hi.str();
    doc["result"]["width"] = Rational(
        1, static_cast<std::int64_t>(a.ring().frobenius_q(emax))).str();
  } else if (cmd == "jumps") {
    const Ideal& a = detail::named_ideal(spec);
    Rational T = parse_rational(detail::require_param(spec, "T"));
    std::uint32_t emax = detail::uint_param(spec, "emax", opts.default_emax);
    JumpOptions jopts;
    jopts.tau = tau_opts;
    doc["result"] = to_json(jumping_exponents(a, T, emax, jopts));
  } else if (cmd == "degree-check") {
    const Ideal& a = detail::named_ideal(spec);
    Rational t = parse_rational(detail::require_param(spec, "t"));
    std::uint64_t r = detail::parse_uint(detail::require_param(spec, "r"), 0, "r");
    doc["result"]["ok"] = degree_bound_check(a, t, r, tau_opts);
    doc["result"]["max_generator_degree"] = a.max_generator_degree();
  } else if (cmd == "ffrt-decompose") {
    if (!spec.semigroup)
      throw InvalidInputError("ffrt-decompose needs a semigroup header");
    std::uint64_t q = detail::parse_uint(detail::require_param(spec, "q"), 0, "q");
    auto pe = prime_power_split(q);
    if (!pe) throw InvalidInputError("q must be a prime power");
    doc["result"] = to_json(ffrt_decompose(*spec.semigroup, q));
    doc["result"]["p"] = pe->first;
    doc["result"]["e"] = pe->second;
  } else if (cmd == "frac-chain") {
    if (!spec.semigroup)
      throw InvalidInputError("frac-chain needs a semigroup header");
    std::uint64_t x = detail::parse_uint(detail::require_param(spec, "x"), 0, "x");
    std::uint32_t p = detail::uint_param(spec, "p");
    if (!PrimeField::is_prime(p))
      throw InvalidInputError("frac-chain: p must be prime");
    std::uint32_t emax = detail::uint_param(spec, "emax", opts.default_emax);
    if (emax > 24) throw InvalidInputError("frac-chain: emax too large");
    std::string mtext = detail::require_param(spec, "M");
    FracIdeal M = mtext == "R"
                      ? FracIdeal::ring(*spec.semigroup)
                      : FracIdeal(*spec.semigroup,
                                  detail::parse_brace_list(mtext));
    FracChainReport rep = chain_stabilize_frac(x, M, emax, p);
    doc["result"] = to_json(rep);
    if (!rep.stabilization_index) {
      doc["status"] = "unstabilized";
      code = 1;
    }
  } else {
    throw InvalidInputError("unknown command '" + cmd + "'");
  }
  return {doc, code};
}

inline std::string render(const json& doc, int indent) {
  return doc.dump(indent) + "\n";
}

}  // namespace frobkit

#endif
