#pragma once

// Buchberger's algorithm over Q in degree-reverse-lexicographic order, and
// the ideal tests built on it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

/// Degree reverse lexicographic order on monomials, variables ranked in
/// declaration order. `operator()` is "greater than" so that maps iterate
/// from the leading term down.
struct DegRevLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

namespace detail {

using DTerms = std::map<ExponentVector, Rational, DegRevLexGreater>;

inline DTerms to_dterms(const Polynomial& p) {
  if (p.is_parametric()) throw PreconditionError("Groebner bases need non-parametric input");
  DTerms t;
  for (const auto& [e, c] : p.terms()) t.emplace(e, c.constant());
  return t;
}

inline Polynomial from_dterms(const DTerms& t, const Polynomial& like) {
  Polynomial p = like.zero_like();
  for (const auto& [e, c] : t) p.add_term(e, c);
  return p;
}

inline void make_monic(DTerms& t) {
  if (t.empty()) return;
  const Rational inv = 1 / t.begin()->second;
  for (auto& [e, c] : t) c *= inv;
}

// t -= c * x^shift * g
inline void sub_multiple(DTerms& t, const Rational& c, const ExponentVector& shift, const DTerms& g) {
  for (const auto& [e, gc] : g) {
    auto key = e + shift;
    auto it = t.find(key);
    if (it == t.end()) {
      t.emplace(std::move(key), -c * gc);
    } else {
      it->second -= c * gc;
      if (it->second == 0) t.erase(it);
    }
  }
}

inline DTerms normal_form(DTerms f, const std::vector<DTerms>& basis) {
  DTerms rem;
  while (!f.empty()) {
    auto lead = f.begin();
    const DTerms* div = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.begin()->first.divides(lead->first)) {
        div = &g;
        break;
      }
    }
    if (div == nullptr) {
      rem.insert(f.extract(lead));
      continue;
    }
    const Rational c = lead->second / div->begin()->second;
    const ExponentVector shift = lead->first - div->begin()->first;
    sub_multiple(f, c, shift, *div);
  }
  return rem;
}

inline DTerms s_polynomial(const DTerms& f, const DTerms& g) {
  const auto& lf = f.begin()->first;
  const auto& lg = g.begin()->first;
  const ExponentVector l = lcm(lf, lg);
  DTerms s;
  sub_multiple(s, Rational(-1) / f.begin()->second, l - lf, f);
  sub_multiple(s, Rational(1) / g.begin()->second, l - lg, g);
  return s;
}

inline bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// Reduced Groebner basis; stops early with {1} once a constant appears.
inline std::vector<DTerms> buchberger(std::vector<DTerms> gens) {
  std::vector<DTerms> g;
  for (auto& f : gens) {
    if (f.empty()) continue;
    make_monic(f);
    g.push_back(std::move(f));
  }
  auto unit = [&](std::size_t n) {
    DTerms one;
    one.emplace(ExponentVector(n), Rational(1));
    return std::vector<DTerms>{one};
  };
  for (const auto& f : g)
    if (f.begin()->first.is_zero()) return unit(f.begin()->first.size());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& p) {
    return lcm(g[p.first].begin()->first, g[p.second].begin()->first).degree();
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      const int da = lcm_degree(a), db = lcm_degree(b);
      return da != db ? da < db : a < b;
    });
    const auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].begin()->first, g[j].begin()->first)) continue;

    DTerms r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.empty()) continue;
    make_monic(r);
    if (r.begin()->first.is_zero()) return unit(r.begin()->first.size());
    for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(std::move(r));
  }

  // Drop generators whose leading monomial is divisible by another's.
  std::vector<DTerms> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].begin()->first;
      const auto& lj = g[j].begin()->first;
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<DTerms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    DTerms lead;
    lead.insert(*minimal[i].begin());
    DTerms tail = minimal[i];
    tail.erase(tail.begin());
    for (auto& kv : normal_form(std::move(tail), others)) lead.insert(kv);
    minimal[i] = std::move(lead);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const DTerms& a, const DTerms& b) {
    return DegRevLexGreater{}(b.begin()->first, a.begin()->first);
  });
  return minimal;
}

}  // namespace detail

/// Reduced, monic Groebner basis in degrevlex order.
struct GroebnerBasis {
  std::vector<Polynomial> generators;

  bool is_unit() const {
    return generators.size() == 1 && generators[0].size() == 1 && generators[0].has_constant_term();
  }
};

inline void check_same_ring(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("an ideal needs at least one generator");
  for (const auto& g : gens)
    if (g.nvars() != gens[0].nvars()) throw PreconditionError("generators live in different rings");
}

inline GroebnerBasis groebner(const std::vector<Polynomial>& gens) {
  check_same_ring(gens);
  std::vector<detail::DTerms> in;
  for (const auto& g : gens) in.push_back(detail::to_dterms(g));
  GroebnerBasis gb;
  for (const auto& t : detail::buchberger(std::move(in))) gb.generators.push_back(detail::from_dterms(t, gens[0]));
  return gb;
}

/// Remainder of p on division by a Groebner basis.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  std::vector<detail::DTerms> basis;
  for (const auto& g : gb.generators) basis.push_back(detail::to_dterms(g));
  return detail::from_dterms(detail::normal_form(detail::to_dterms(p), basis), p);
}

inline bool contains_one(const std::vector<Polynomial>& gens) {
  check_same_ring(gens);
  std::vector<detail::DTerms> in;
  for (const auto& g : gens) in.push_back(detail::to_dterms(g));
  const auto gb = detail::buchberger(std::move(in));
  return gb.size() == 1 && gb[0].size() == 1 && gb[0].begin()->first.is_zero();
}

/// True iff the generators have no common zero with z_1 ... z_n != 0.
/// Adjoins u and the generator u z_1 ... z_n - 1, then tests 1 in the ideal.
inline bool empty_on_torus(const std::vector<Polynomial>& gens) {
  check_same_ring(gens);
  const std::size_t n = gens[0].nvars();
  auto widen = [&](const ExponentVector& e) {
    std::vector<int> v(e.begin(), e.end());
    v.push_back(0);
    return ExponentVector(std::move(v));
  };
  std::vector<detail::DTerms> in;
  for (const auto& g : gens) {
    detail::DTerms t;
    for (const auto& [e, c] : detail::to_dterms(g)) t.emplace(widen(e), c);
    in.push_back(std::move(t));
  }
  detail::DTerms rab;
  rab.emplace(ExponentVector(std::vector<int>(n + 1, 1)), Rational(1));
  rab.emplace(ExponentVector(n + 1), Rational(-1));
  in.push_back(std::move(rab));
  const auto gb = detail::buchberger(std::move(in));
  return gb.size() == 1 && gb[0].size() == 1 && gb[0].begin()->first.is_zero();
}

}  // namespace singlab
