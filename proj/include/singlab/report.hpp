#pragma once

// JSON form of the reports. Integer invariants are JSON integers, rationals
// are strings "p/q". Objects use nlohmann::json's sorted keys, so output is
// canonical.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "singlab/family.hpp"
#include "singlab/invariants.hpp"
#include "singlab/newton.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

using json = nlohmann::json;

inline constexpr const char* kSchema = "singlab/1";

/// What `newton` reports about one support.
struct NewtonSummary {
  std::vector<ExponentVector> vertices;
  std::vector<std::size_t> face_counts;  // by dimension 0..n-1
  bool convenient = false;
  std::optional<VolumeVector> volumes;   // of the padded support when stabilized
  std::optional<Integer> nu;
  std::vector<std::size_t> padded_axes;
  std::optional<long> pad_degree;
};

/// Summary of the Newton polyhedron; with `stabilize`, a non-convenient
/// support is padded on the axes it misses. Without it, nu and the volumes
/// stay empty for non-convenient input.
inline NewtonSummary summarize_newton(const Support& supp, bool stabilize) {
  NewtonSummary s;
  const auto cx = newton_complex(supp);
  s.vertices = cx.vertices;
  for (const auto& layer : cx.faces) s.face_counts.push_back(layer.size());
  s.convenient = cx.convenient;
  if (cx.convenient) {
    s.volumes = gamma_minus_volumes(supp);
    s.nu = newton_number_from_volumes(*s.volumes);
  } else if (stabilize) {
    const auto st = newton_number_stabilized(supp);
    s.nu = st.nu;
    s.padded_axes = st.padded_axes;
    s.pad_degree = st.pad_degree;
    Support padded = supp;
    for (auto i : st.padded_axes)
      padded.insert(ExponentVector::unit(cx.nvars, i, static_cast<int>(*st.pad_degree)));
    s.volumes = gamma_minus_volumes(padded);
  }
  return s;
}

namespace detail {

inline json int_json(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer invariant too large for JSON: " + z.get_str());
  return json(static_cast<long long>(z.get_si()));
}

inline Integer int_from(const json& j) { return Integer(std::to_string(j.get<long long>())); }

inline Rational rational_from(const json& j) {
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

inline json points_json(const std::vector<ExponentVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(p.entries());
  return a;
}

inline std::vector<ExponentVector> points_from(const json& j) {
  std::vector<ExponentVector> out;
  for (const auto& p : j) out.emplace_back(p.get<std::vector<int>>());
  return out;
}

template <class Opt, class F>
json optional_json(const Opt& o, F&& f) {
  return o ? f(*o) : json(nullptr);
}

}  // namespace detail

inline json to_json(const Face& f) {
  json w = json::array();
  for (const auto& x : f.weight) w.push_back(detail::int_json(x));
  return {{"dim", f.dim},
          {"points", detail::points_json(f.points)},
          {"vertices", detail::points_json(f.vertices)},
          {"weight", w},
          {"level", detail::int_json(f.level)}};
}

inline Face face_from_json(const json& j) {
  Face f;
  f.dim = j.at("dim").get<int>();
  f.points = detail::points_from(j.at("points"));
  f.vertices = detail::points_from(j.at("vertices"));
  for (const auto& x : j.at("weight")) f.weight.push_back(detail::int_from(x));
  f.level = detail::int_from(j.at("level"));
  return f;
}

inline json to_json(const InvariantReport& r) {
  return {
      {"mu", detail::int_json(r.mu)},
      {"mu_route", to_string(r.route)},
      {"mu_certified", r.mu_certified},
      {"nu", detail::int_json(r.nu)},
      {"nu_stabilized", r.nu_stabilized},
      {"mult", r.mult},
      {"convenient", r.convenient},
      {"nondegenerate", r.nondeg.nondegenerate},
      {"faces_checked", r.nondeg.faces_checked},
      {"witness", detail::optional_json(r.nondeg.witness, [](const Face& f) { return to_json(f); })},
      {"mu_newton", detail::optional_json(r.mu_newton, detail::int_json)},
      {"mu_oracle", detail::optional_json(r.mu_oracle, detail::int_json)},
      {"oracle_degree", detail::optional_json(r.oracle_degree, [](int d) { return json(d); })},
      {"kouchnirenko_equality", to_string(r.equality)},
  };
}

inline InvariantReport invariant_report_from_json(const json& j) {
  InvariantReport r;
  r.mu = detail::int_from(j.at("mu"));
  r.route = j.at("mu_route") == "newton" ? MuRoute::newton : MuRoute::macaulay;
  r.mu_certified = j.at("mu_certified").get<bool>();
  r.nu = detail::int_from(j.at("nu"));
  r.nu_stabilized = j.at("nu_stabilized").get<bool>();
  r.mult = j.at("mult").get<int>();
  r.convenient = j.at("convenient").get<bool>();
  r.nondeg.nondegenerate = j.at("nondegenerate").get<bool>();
  r.nondeg.faces_checked = j.at("faces_checked").get<std::size_t>();
  if (!j.at("witness").is_null()) r.nondeg.witness = face_from_json(j.at("witness"));
  if (!j.at("mu_newton").is_null()) r.mu_newton = detail::int_from(j.at("mu_newton"));
  if (!j.at("mu_oracle").is_null()) r.mu_oracle = detail::int_from(j.at("mu_oracle"));
  if (!j.at("oracle_degree").is_null()) r.oracle_degree = j.at("oracle_degree").get<int>();
  const auto eq = j.at("kouchnirenko_equality").get<std::string>();
  for (auto e : {EqualityCheck::not_run, EqualityCheck::holds, EqualityCheck::inapplicable_degenerate,
                 EqualityCheck::inapplicable_nonconvenient})
    if (eq == to_string(e)) r.equality = e;
  return r;
}

inline bool operator==(const NondegeneracyVerdict& a, const NondegeneracyVerdict& b) {
  auto same_witness = [&] {
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (!a.witness) return true;
    return a.witness->points == b.witness->points && a.witness->vertices == b.witness->vertices &&
           a.witness->weight == b.witness->weight && a.witness->level == b.witness->level &&
           a.witness->dim == b.witness->dim;
  };
  return a.nondegenerate == b.nondegenerate && a.faces_checked == b.faces_checked && same_witness();
}

inline bool operator==(const InvariantReport& a, const InvariantReport& b) {
  return a.mu == b.mu && a.route == b.route && a.mu_certified == b.mu_certified && a.nu == b.nu &&
         a.nu_stabilized == b.nu_stabilized && a.mult == b.mult && a.convenient == b.convenient &&
         a.nondeg == b.nondeg && a.mu_newton == b.mu_newton && a.mu_oracle == b.mu_oracle &&
         a.oracle_degree == b.oracle_degree && a.equality == b.equality;
}

inline json to_json(const SampleRecord& s) { return {{"t", s.t0.get_str()}, {"report", to_json(s.report)}}; }

inline SampleRecord sample_from_json(const json& j) {
  return {detail::rational_from(j.at("t")), invariant_report_from_json(j.at("report"))};
}

inline json to_json(const FamilyReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  return {
      {"base", to_json(r.base)},
      {"samples", samples},
      {"mu_constant", to_string(r.mu_constant)},
      {"equimultiple", to_string(r.equimultiple)},
      {"family_nondegenerate", to_string(r.family_nondegenerate)},
      {"verdict", to_string(r.verdict)},
      {"newton_boundary_constant", r.newton_boundary_constant},
      {"control_function",
       {{"t", r.control.t0.get_str()},
        {"vertices", detail::points_json(r.control.vertices)},
        {"text", r.control.text}}},
      {"evidence", r.evidence},
  };
}

inline FamilyReport family_report_from_json(const json& j) {
  auto tri = [](const json& v) {
    const auto s = v.get<std::string>();
    return s == "yes" ? TriState::yes : s == "no" ? TriState::no : TriState::inconclusive;
  };
  FamilyReport r;
  r.base = sample_from_json(j.at("base"));
  for (const auto& s : j.at("samples")) r.samples.push_back(sample_from_json(s));
  r.mu_constant = tri(j.at("mu_constant"));
  r.equimultiple = tri(j.at("equimultiple"));
  r.family_nondegenerate = tri(j.at("family_nondegenerate"));
  const auto v = j.at("verdict").get<std::string>();
  for (auto x : {Verdict::topologically_trivial_and_equimultiple, Verdict::not_applicable_degenerate,
                 Verdict::mu_not_constant, Verdict::inconclusive})
    if (v == to_string(x)) r.verdict = x;
  r.newton_boundary_constant = j.at("newton_boundary_constant").get<bool>();
  const auto& c = j.at("control_function");
  r.control.t0 = detail::rational_from(c.at("t"));
  r.control.vertices = detail::points_from(c.at("vertices"));
  r.control.text = c.at("text").get<std::string>();
  r.evidence = j.at("evidence").get<std::string>();
  return r;
}

inline bool operator==(const FamilyReport& a, const FamilyReport& b) {
  auto same = [](const SampleRecord& x, const SampleRecord& y) { return x.t0 == y.t0 && x.report == y.report; };
  if (!same(a.base, b.base) || a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    if (!same(a.samples[i], b.samples[i])) return false;
  return a.mu_constant == b.mu_constant && a.equimultiple == b.equimultiple &&
         a.family_nondegenerate == b.family_nondegenerate && a.verdict == b.verdict &&
         a.newton_boundary_constant == b.newton_boundary_constant && a.control.t0 == b.control.t0 &&
         a.control.vertices == b.control.vertices && a.control.text == b.control.text &&
         a.evidence == b.evidence;
}

inline json to_json(const NewtonSummary& s) {
  json vol = nullptr;
  if (s.volumes) {
    vol = json::array();
    for (const auto& v : s.volumes->v) vol.push_back(v.get_str());
  }
  return {
      {"vertices", detail::points_json(s.vertices)},
      {"face_counts", s.face_counts},
      {"convenient", s.convenient},
      {"volumes", vol},
      {"nu", detail::optional_json(s.nu, detail::int_json)},
      {"padded_axes", s.padded_axes},
      {"pad_degree", detail::optional_json(s.pad_degree, [](long d) { return json(d); })},
  };
}

inline NewtonSummary newton_summary_from_json(const json& j) {
  NewtonSummary s;
  s.vertices = detail::points_from(j.at("vertices"));
  s.face_counts = j.at("face_counts").get<std::vector<std::size_t>>();
  s.convenient = j.at("convenient").get<bool>();
  if (!j.at("volumes").is_null()) {
    VolumeVector vv;
    for (const auto& v : j.at("volumes")) vv.v.push_back(detail::rational_from(v));
    s.volumes = vv;
  }
  if (!j.at("nu").is_null()) s.nu = detail::int_from(j.at("nu"));
  s.padded_axes = j.at("padded_axes").get<std::vector<std::size_t>>();
  if (!j.at("pad_degree").is_null()) s.pad_degree = j.at("pad_degree").get<long>();
  return s;
}

inline bool operator==(const NewtonSummary& a, const NewtonSummary& b) {
  const bool vol = a.volumes.has_value() == b.volumes.has_value() && (!a.volumes || a.volumes->v == b.volumes->v);
  return a.vertices == b.vertices && a.face_counts == b.face_counts && a.convenient == b.convenient && vol &&
         a.nu == b.nu && a.padded_axes == b.padded_axes && a.pad_degree == b.pad_degree;
}

}  // namespace singlab
