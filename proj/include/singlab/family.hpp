#pragma once

// One-parameter deformations F(z, t): invariants at sampled parameter
// values and the resulting verdict. A family that is mu-constant and
// non-degenerate at every sample is reported topologically trivial and
// equimultiple; degenerate samples make that conclusion unavailable.

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/invariants.hpp"
#include "singlab/newton.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

enum class TriState { yes, no, inconclusive };

enum class Verdict {
  topologically_trivial_and_equimultiple,
  not_applicable_degenerate,
  mu_not_constant,
  inconclusive,
};

inline const char* to_string(TriState s) {
  switch (s) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::topologically_trivial_and_equimultiple: return "topologically-trivial-and-equimultiple";
    case Verdict::not_applicable_degenerate: return "not-applicable-degenerate";
    case Verdict::mu_not_constant: return "mu-not-constant";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// F(z, t) with f = F(z, 0) the undeformed germ.
class DeformationFamily {
 public:
  explicit DeformationFamily(Polynomial F) : F_(std::move(F)) {
    if (!F_.param()) throw PreconditionError("a deformation family needs a declared parameter");
    if (F_.has_constant_term()) throw PreconditionError("F(0, t) must vanish identically");
    base_ = specialize(F_, Rational(0));
    if (base_.is_zero()) throw PreconditionError("F(z, 0) is the zero polynomial");
  }

  const Polynomial& F() const noexcept { return F_; }
  const Polynomial& base() const noexcept { return base_; }
  Polynomial at(const Rational& t0) const { return specialize(F_, t0); }

 private:
  Polynomial F_;
  Polynomial base_;
};

struct SampleRecord {
  Rational t0;
  InvariantReport report;
};

struct ControlFunction {
  Rational t0;
  std::vector<ExponentVector> vertices;
  std::string text;  // rho(z) = sum over vertices of z^a conj(z)^a
};

struct FamilyReport {
  SampleRecord base;
  std::vector<SampleRecord> samples;  // nonzero t0, in sampling order
  TriState mu_constant = TriState::inconclusive;
  TriState equimultiple = TriState::inconclusive;
  TriState family_nondegenerate = TriState::inconclusive;
  Verdict verdict = Verdict::inconclusive;
  bool newton_boundary_constant = false;
  ControlFunction control;
  std::string evidence;
};

inline constexpr std::uint64_t kDefaultSeed = 0;

/// 1, 1/2, 1/3, then seeded distinct nonzero rationals p/q with |p|, q <= 9.
inline std::vector<Rational> sample_params(std::size_t k, std::uint64_t seed = kDefaultSeed) {
  if (k == 0) throw PreconditionError("need at least one sample");
  std::vector<Rational> out;
  for (int q = 1; q <= 3 && out.size() < k; ++q) out.emplace_back(1, q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  while (out.size() < k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (r == 0 || std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(r);
  }
  return out;
}

/// Verdict from the two tri-states: triviality needs both to hold.
inline Verdict family_verdict(TriState mu_constant, TriState family_nondegenerate) {
  if (mu_constant == TriState::no) return Verdict::mu_not_constant;
  if (family_nondegenerate == TriState::no) return Verdict::not_applicable_degenerate;
  if (mu_constant == TriState::yes && family_nondegenerate == TriState::yes)
    return Verdict::topologically_trivial_and_equimultiple;
  return Verdict::inconclusive;
}

/// Minimum number of nonzero samples before agreement with the base counts
/// as constancy.
inline constexpr std::size_t kMinAgreeingSamples = 3;

/// yes: every sample equals the base value and there are enough samples;
/// no: the samples agree with each other but not with the base;
/// inconclusive: samples disagree among themselves, or too few samples.
template <class T>
TriState constancy(const T& base, const std::vector<T>& samples) {
  if (samples.empty()) return TriState::inconclusive;
  for (const auto& s : samples)
    if (s != samples.front()) return TriState::inconclusive;
  if (samples.front() != base) return TriState::no;
  return samples.size() >= kMinAgreeingSamples ? TriState::yes : TriState::inconclusive;
}

inline std::string render_control_function(const std::vector<ExponentVector>& verts,
                                           const std::vector<std::string>& vars) {
  std::ostringstream out;
  bool first = true;
  for (const auto& a : verts) {
    if (!first) out << " + ";
    first = false;
    std::vector<std::string> holo, anti;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const std::string p = a[i] == 1 ? "" : "^" + std::to_string(a[i]);
      holo.push_back(vars[i] + p);
      anti.push_back("conj(" + vars[i] + ")" + p);
    }
    bool star = false;
    for (const auto& h : holo) {
      out << (star ? "*" : "") << h;
      star = true;
    }
    for (const auto& h : anti) out << '*' << h;
  }
  return first ? "0" : out.str();
}

/// rho(z) = sum over the Newton vertices a of F_{t0} of z^a conj(z)^a.
inline ControlFunction control_function(const DeformationFamily& fam, const Rational& t0) {
  if (t0 == 0) throw PreconditionError("control function is taken at a nonzero parameter value");
  const Polynomial ft = fam.at(t0);
  if (ft.is_zero()) throw PreconditionError("F(z, t0) is the zero polynomial");
  ControlFunction c;
  c.t0 = t0;
  c.vertices = vertices(support(ft));
  c.text = render_control_function(c.vertices, ft.vars());
  return c;
}

/// Whether the compact faces at every sample coincide with those at t = 0.
/// Informational only: the verdict does not depend on it.
inline bool check_newton_boundary_constant(const DeformationFamily& fam, const std::vector<Rational>& samples) {
  const auto base = newton_complex(support(fam.base())).point_sets();
  for (const auto& t0 : samples)
    if (newton_complex(support(fam.at(t0))).point_sets() != base) return false;
  return true;
}

struct FamilyOptions {
  std::size_t samples = 3;
  std::uint64_t seed = kDefaultSeed;
  AnalyzeOptions analyze;
  bool parallel = true;  // analyze samples concurrently
};

inline FamilyReport analyze_family(const DeformationFamily& fam, const FamilyOptions& opt = {}) {
  const auto ts = sample_params(opt.samples, opt.seed);

  FamilyReport rep;
  rep.base = {Rational(0), InvariantReport{}};

  auto run = [&](const Rational& t0) { return analyze(fam.at(t0), opt.analyze); };
  if (opt.parallel) {
    auto base_job = std::async(std::launch::async, run, Rational(0));
    std::vector<std::future<InvariantReport>> jobs;
    for (const auto& t0 : ts) jobs.push_back(std::async(std::launch::async, run, t0));
    rep.base.report = base_job.get();
    for (std::size_t i = 0; i < ts.size(); ++i) rep.samples.push_back({ts[i], jobs[i].get()});
  } else {
    rep.base.report = run(Rational(0));
    for (const auto& t0 : ts) rep.samples.push_back({t0, run(t0)});
  }

  std::vector<Integer> mus;
  std::vector<int> mults;
  bool all_nondeg = rep.base.report.nondeg.nondegenerate;
  for (const auto& s : rep.samples) {
    if (s.report.mu > rep.base.report.mu)
      throw SemicontinuityViolation("mu(" + s.t0.get_str() + ") = " + s.report.mu.get_str() +
                                    " exceeds mu(0) = " + rep.base.report.mu.get_str());
    mus.push_back(s.report.mu);
    mults.push_back(s.report.mult);
    all_nondeg = all_nondeg && s.report.nondeg.nondegenerate;
  }

  rep.mu_constant = constancy(rep.base.report.mu, mus);
  rep.equimultiple = constancy(rep.base.report.mult, mults);
  rep.family_nondegenerate = all_nondeg ? TriState::yes : TriState::no;
  rep.verdict = family_verdict(rep.mu_constant, rep.family_nondegenerate);
  rep.newton_boundary_constant = check_newton_boundary_constant(fam, ts);
  rep.control = control_function(fam, ts.front());

  std::ostringstream ev;
  ev << "mu and multiplicity compared at t = 0 and " << ts.size() << " sampled value"
     << (ts.size() == 1 ? "" : "s") << " of t; constancy is sampling evidence, not a proof for all small t";
  rep.evidence = ev.str();
  return rep;
}

}  // namespace singlab
