#pragma once

// The command-line operations as in-process functions: each takes parsed
// arguments and returns the exit code and the report document.

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/family.hpp"
#include "singlab/invariants.hpp"
#include "singlab/newton.hpp"
#include "singlab/parse.hpp"
#include "singlab/report.hpp"

#ifndef SINGLAB_VERSION
#define SINGLAB_VERSION "0.1.0"
#endif

namespace singlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad flags, parse errors, violated preconditions
  kNotIsolated = 2,    // oracle or stabilization did not certify
  kNonConvenient = 3,  // Newton number of a non-convenient support without --stabilize
  kInternal = 4,       // semicontinuity violation or internal inconsistency
};

struct CommandResult {
  int exit_code = kOk;
  json document;
  std::string diagnostic;  // for stderr; empty on success
};

struct InputArgs {
  std::string poly;
  std::string vars;  // comma separated
  std::optional<std::string> param;
};

struct InvariantsArgs {
  InputArgs input;
  bool verify = false;
  int nmax = 64;
};

struct FamilyArgs {
  InputArgs input;
  std::size_t samples = 3;
  std::uint64_t seed = kDefaultSeed;
  bool verify = false;
  int nmax = 64;
};

struct NewtonArgs {
  InputArgs input;
  bool stabilize = false;
};

struct SectionArgs {
  InputArgs input;
  std::string hyperplane;
  std::size_t random = 0;
  std::uint64_t seed = kDefaultSeed;
  std::optional<long> reference;  // a quoted value to compare against
  int nmax = 64;
};

inline std::vector<std::string> split_vars(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char ch : list) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

namespace detail {

inline json input_json(const InputArgs& in) {
  return {{"poly", in.poly},
          {"vars", split_vars(in.vars)},
          {"param", in.param ? json(*in.param) : json(nullptr)}};
}

inline json base_document(const std::string& command, const InputArgs& in) {
  return {{"schema", kSchema}, {"tool_version", SINGLAB_VERSION}, {"command", command}, {"input", input_json(in)}};
}

template <class Body>
CommandResult run_command(const std::string& command, const InputArgs& in, Body&& body) {
  CommandResult r;
  r.document = base_document(command, in);
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](int code, const char* kind, const std::exception& e) {
    r.exit_code = code;
    r.diagnostic = std::string(kind) + ": " + e.what();
    r.document["error"] = {{"kind", kind}, {"message", e.what()}};
  };
  try {
    r.document["result"] = body();
  } catch (const ParseError& e) {
    fail(kUsage, "parse-error", e);
  } catch (const PreconditionError& e) {
    fail(kUsage, "precondition", e);
  } catch (const NotIsolated& e) {
    fail(kNotIsolated, "not-isolated", e);
  } catch (const StabilizationFailure& e) {
    fail(kNotIsolated, "stabilization-failure", e);
  } catch (const NonConvenient& e) {
    fail(kNonConvenient, "non-convenient", e);
  } catch (const SemicontinuityViolation& e) {
    fail(kInternal, "semicontinuity-violation", e);
  } catch (const Error& e) {
    fail(kInternal, "internal", e);
  }
  r.document["elapsed_us"] =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Polynomial read_poly(const InputArgs& in) { return parse_poly(in.poly, split_vars(in.vars), in.param); }

inline Polynomial read_germ(const InputArgs& in) {
  if (in.param) throw PreconditionError("this command takes a germ; drop --param");
  return read_poly(in);
}

}  // namespace detail

inline CommandResult cmd_invariants(const InvariantsArgs& a) {
  return detail::run_command("invariants", a.input, [&] {
    AnalyzeOptions opt;
    opt.verify = a.verify;
    opt.oracle.cap = a.nmax;
    return to_json(analyze(detail::read_germ(a.input), opt));
  });
}

inline CommandResult cmd_family(const FamilyArgs& a) {
  return detail::run_command("family", a.input, [&] {
    if (!a.input.param) throw PreconditionError("family needs --param");
    FamilyOptions opt;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.analyze.verify = a.verify;
    opt.analyze.oracle.cap = a.nmax;
    return to_json(analyze_family(DeformationFamily(detail::read_poly(a.input)), opt));
  });
}

inline CommandResult cmd_newton(const NewtonArgs& a) {
  return detail::run_command("newton", a.input, [&] {
    const auto f = detail::read_germ(a.input);
    if (f.is_zero()) throw PreconditionError("zero polynomial");
    const auto supp = support(f);
    if (!a.stabilize && !is_convenient(supp))
      throw NonConvenient("support misses a coordinate axis; rerun with --stabilize");
    return to_json(summarize_newton(supp, a.stabilize));
  });
}

inline CommandResult cmd_section(const SectionArgs& a) {
  return detail::run_command("section", a.input, [&] {
    const auto f = detail::read_germ(a.input);
    require_germ(f);
    const auto vars = split_vars(a.input.vars);
    const auto h = parse_hyperplane(a.hyperplane, vars);
    OracleOptions opt;
    opt.cap = a.nmax;
    const auto cut = substitute_hyperplane(f, h);
    const auto res = milnor_oracle_frame(cut, opt);
    json out = {{"hyperplane", a.hyperplane},
                {"section", to_string(cut)},
                {"mu", singlab::detail::int_json(res.mu)},
                {"oracle_degree", res.frame.degree},
                {"random", nullptr},
                {"reference_mu", a.reference ? json(*a.reference) : json(nullptr)}};
    if (a.random > 0) {
      const auto rs = random_section_milnor(f, h.index, a.random, a.seed, opt);
      json samples = json::array();
      for (const auto& s : rs.samples) {
        std::vector<std::string> coeffs;
        for (const auto& c : s.hyperplane.coefficients) coeffs.push_back(c.get_str());
        samples.push_back({{"coefficients", coeffs}, {"mu", singlab::detail::int_json(s.mu)}});
      }
      out["random"] = {{"count", a.random},
                       {"seed", a.seed},
                       {"min_mu", singlab::detail::int_json(rs.min_mu)},
                       {"samples", samples}};
    }
    return out;
  });
}

namespace detail {

inline bool scalar_array(const json& j) {
  for (const auto& x : j)
    if (x.is_object()) return false;
  return true;
}

inline void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

}  // namespace detail

/// One "key: value" line per leaf, keys dotted; values are the same as in
/// the JSON document.
inline std::string render_text(const json& doc) {
  std::ostringstream out;
  detail::flatten(doc, "", out);
  return out.str();
}

}  // namespace singlab::cli
