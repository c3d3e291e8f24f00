#pragma once

// Invariants of a single germ: Kouchnirenko non-degeneracy, Milnor number by
// the Newton number (when Kouchnirenko's equality applies) or by the
// Macaulay-frame oracle, multiplicity, and Milnor numbers of hyperplane
// sections.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/groebner.hpp"
#include "singlab/macaulay.hpp"
#include "singlab/newton.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

struct NondegeneracyVerdict {
  bool nondegenerate = true;
  std::optional<Face> witness;  // a face whose f_gamma partials meet the torus
  std::size_t faces_checked = 0;
};

inline void require_germ(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (f.is_parametric()) throw PreconditionError("germ still depends on the parameter; specialize first");
  if (f.has_constant_term()) throw PreconditionError("germ does not vanish at the origin");
}

/// Does the face polynomial's gradient vanish somewhere on the torus?
inline bool face_is_degenerate(const Polynomial& f, const Face& face) {
  const Polynomial fg = face_polynomial(f, face);
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto d = differentiate(fg, i);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  if (partials.empty()) return true;
  return !empty_on_torus(partials);
}

/// Checks every compact face of dimension >= 1. A vertex is skipped unless
/// `include_vertices`: the partials of c z^a cannot vanish together on the
/// torus since a != 0.
inline NondegeneracyVerdict check_nondegenerate(const Polynomial& f, const NewtonComplex& cx,
                                                bool include_vertices = false) {
  NondegeneracyVerdict v;
  for (std::size_t d = include_vertices ? 0 : 1; d < cx.faces.size(); ++d) {
    for (const auto& face : cx.faces[d]) {
      ++v.faces_checked;
      if (face_is_degenerate(f, face)) {
        v.nondegenerate = false;
        v.witness = face;
        return v;
      }
    }
  }
  return v;
}

inline NondegeneracyVerdict check_nondegenerate(const Polynomial& f, bool include_vertices = false) {
  require_germ(f);
  return check_nondegenerate(f, newton_complex(support(f)), include_vertices);
}

/// Milnor number through Kouchnirenko's equality mu = nu.
inline Integer milnor_newton(const Polynomial& f) {
  require_germ(f);
  const auto supp = support(f);
  if (!is_convenient(supp)) throw PreconditionError("Newton route needs a convenient germ");
  if (!check_nondegenerate(f).nondegenerate) throw PreconditionError("Newton route needs a non-degenerate germ");
  return newton_number(supp);
}

struct OracleOptions {
  int cap = 64;                    // largest truncation degree tried
  std::optional<int> start;        // default 2 * multiplicity(f)
  int step = 2;
};

struct OracleResult {
  Integer mu;
  MacaulayFrame frame;  // the certifying frame
};

/// dim O_n / J(f), certified by the first frame of the schedule whose
/// certificate holds.
inline OracleResult milnor_oracle_frame(const Polynomial& f, const OracleOptions& opt = {}) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (f.is_parametric()) throw PreconditionError("germ still depends on the parameter; specialize first");
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < f.nvars(); ++i) jac.push_back(differentiate(f, i));
  bool any = false;
  for (const auto& g : jac) any = any || !g.is_zero();
  if (!any) throw NotIsolated("all partial derivatives vanish");

  const int first = std::max(2, opt.start.value_or(2 * multiplicity(f)));
  for (int N = first; N <= opt.cap; N += opt.step) {
    auto frame = local_quotient_dim(jac, N);
    if (frame.certificate) return {Integer(static_cast<unsigned long>(frame.dimension)), std::move(frame)};
  }
  throw NotIsolated("Jacobian quotient not certified finite up to degree " + std::to_string(opt.cap));
}

inline Integer milnor_oracle(const Polynomial& f, const OracleOptions& opt = {}) {
  return milnor_oracle_frame(f, opt).mu;
}

inline Integer section_milnor(const Polynomial& f, const HyperplaneSpec& h, const OracleOptions& opt = {}) {
  if (f.is_parametric()) throw PreconditionError("germ still depends on the parameter; specialize first");
  return milnor_oracle(substitute_hyperplane(f, h), opt);
}

struct SectionSample {
  HyperplaneSpec hyperplane;
  Integer mu;
};

struct RandomSectionResult {
  Integer min_mu;
  std::vector<SectionSample> samples;
};

/// Milnor numbers of `count` seeded random sections z_index = sum a_j z_j
/// with small-height rational a_j; generic sections minimize mu, so the
/// minimum over the samples estimates the generic value.
inline RandomSectionResult random_section_milnor(const Polynomial& f, std::size_t index, std::size_t count,
                                                 std::uint64_t seed, const OracleOptions& opt = {}) {
  if (count == 0) throw PreconditionError("need at least one random section");
  if (index >= f.nvars()) throw PreconditionError("hyperplane variable out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  RandomSectionResult r;
  for (std::size_t s = 0; s < count; ++s) {
    HyperplaneSpec h;
    h.index = index;
    h.coefficients.assign(f.nvars(), Rational(0));
    for (std::size_t j = 0; j < f.nvars(); ++j) {
      if (j == index) continue;
      Rational a(num(rng), den(rng));
      a.canonicalize();
      h.coefficients[j] = a;
    }
    Integer mu = section_milnor(f, h, opt);
    if (s == 0 || mu < r.min_mu) r.min_mu = mu;
    r.samples.push_back({std::move(h), std::move(mu)});
  }
  return r;
}

enum class MuRoute { newton, macaulay };

/// Status of the mu = nu comparison in verification mode.
enum class EqualityCheck { not_run, holds, inapplicable_degenerate, inapplicable_nonconvenient };

inline const char* to_string(MuRoute r) { return r == MuRoute::newton ? "newton" : "macaulay"; }

inline const char* to_string(EqualityCheck e) {
  switch (e) {
    case EqualityCheck::not_run: return "not-run";
    case EqualityCheck::holds: return "holds";
    case EqualityCheck::inapplicable_degenerate: return "inapplicable-degenerate";
    case EqualityCheck::inapplicable_nonconvenient: return "inapplicable-nonconvenient";
  }
  return "?";
}

struct InvariantReport {
  Integer mu;
  MuRoute route = MuRoute::newton;
  bool mu_certified = false;
  Integer nu;
  bool nu_stabilized = false;  // nu came from axis padding
  int mult = 0;
  bool convenient = false;
  NondegeneracyVerdict nondeg;
  std::optional<Integer> mu_newton;
  std::optional<Integer> mu_oracle;
  std::optional<int> oracle_degree;  // truncation degree of the certifying frame
  EqualityCheck equality = EqualityCheck::not_run;
};

struct AnalyzeOptions {
  bool verify = false;  // run both routes and compare
  OracleOptions oracle;
};

/// Cheapest sound route: Newton number when the germ is convenient and
/// non-degenerate, otherwise the Macaulay oracle.
inline InvariantReport analyze(const Polynomial& f, const AnalyzeOptions& opt = {}) {
  require_germ(f);
  const auto supp = support(f);
  const auto cx = newton_complex(supp);

  InvariantReport r;
  r.convenient = cx.convenient;
  r.mult = multiplicity(f);
  r.nondeg = check_nondegenerate(f, cx);
  const auto sn = newton_number_stabilized(supp);
  r.nu = sn.nu;
  r.nu_stabilized = sn.padded;

  const bool eligible = r.convenient && r.nondeg.nondegenerate;
  if (eligible) r.mu_newton = r.nu;
  if (!eligible || opt.verify) {
    auto res = milnor_oracle_frame(f, opt.oracle);
    r.mu_oracle = res.mu;
    r.oracle_degree = res.frame.degree;
    if (*r.mu_oracle < r.nu)
      throw InternalInconsistency("Milnor number below Newton number: mu=" + r.mu_oracle->get_str() +
                                  " nu=" + r.nu.get_str());
  }

  if (eligible) {
    r.mu = *r.mu_newton;
    r.route = MuRoute::newton;
  } else {
    r.mu = *r.mu_oracle;
    r.route = MuRoute::macaulay;
  }
  r.mu_certified = true;

  if (opt.verify) {
    if (eligible) {
      if (*r.mu_oracle != *r.mu_newton)
        throw InternalInconsistency("oracle and Newton routes disagree on a non-degenerate convenient germ");
      r.equality = EqualityCheck::holds;
    } else {
      r.equality = r.nondeg.nondegenerate ? EqualityCheck::inapplicable_nonconvenient
                                          : EqualityCheck::inapplicable_degenerate;
    }
  }
  return r;
}

}  // namespace singlab
