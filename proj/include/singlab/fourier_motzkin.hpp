#pragma once

// Exact feasibility of small systems of linear inequalities a.x >= b by
// Fourier-Motzkin elimination, with back-substitution for a witness point.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "singlab/polynomial.hpp"

namespace singlab {

struct LinearInequality {
  std::vector<Rational> a;  // a . x >= b
  Rational b;
};

namespace detail {

// Scales so the first nonzero coefficient has magnitude one; positive
// scaling keeps the inequality's direction.
inline void normalize_inequality(LinearInequality& c) {
  for (const auto& x : c.a) {
    if (x != 0) {
      const Rational s = abs(x);
      for (auto& y : c.a) y /= s;
      c.b /= s;
      return;
    }
  }
}

// Keyed by the normalized left side; only the tightest right side is kept.
using InequalitySet = std::map<std::vector<Rational>, Rational>;

inline bool insert_inequality(InequalitySet& set, LinearInequality c) {
  normalize_inequality(c);
  bool all_zero = true;
  for (const auto& x : c.a) all_zero = all_zero && x == 0;
  if (all_zero) return c.b <= 0;  // 0 >= b
  auto [it, inserted] = set.try_emplace(std::move(c.a), c.b);
  if (!inserted && it->second < c.b) it->second = c.b;
  return true;
}

inline Rational floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

inline Rational ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

}  // namespace detail

/// Returns a point satisfying every inequality, or nullopt if none exists.
/// Variables are eliminated from the last one down; each level's system is
/// kept for back-substitution, which prefers small integer coordinates.
inline std::optional<std::vector<Rational>> fourier_motzkin_solve(
    const std::vector<LinearInequality>& system, std::size_t nvars) {
  std::vector<detail::InequalitySet> levels(nvars + 1);
  for (const auto& c : system) {
    if (c.a.size() != nvars) throw PreconditionError("inequality has wrong arity");
    if (!detail::insert_inequality(levels[nvars], c)) return std::nullopt;
  }

  for (std::size_t k = nvars; k-- > 0;) {
    const auto& cur = levels[k + 1];
    auto& next = levels[k];
    std::vector<LinearInequality> lower, upper;  // coefficient of x_k > 0 / < 0
    for (const auto& [a, b] : cur) {
      if (a[k] == 0) {
        LinearInequality c{a, b};
        if (!detail::insert_inequality(next, std::move(c))) return std::nullopt;
      } else if (a[k] > 0) {
        lower.push_back({a, b});
      } else {
        upper.push_back({a, b});
      }
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo / lo.a[k] + up / |up.a[k]| cancels x_k.
        const Rational sl = 1 / lo.a[k];
        const Rational su = -1 / up.a[k];
        LinearInequality c;
        c.a.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j) c.a[j] = lo.a[j] * sl + up.a[j] * su;
        c.a[k] = 0;
        c.b = lo.b * sl + up.b * su;
        if (!detail::insert_inequality(next, std::move(c))) return std::nullopt;
      }
    }
  }

  std::vector<Rational> x(nvars, Rational(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& [a, b] : levels[k + 1]) {
      if (a[k] == 0) continue;
      Rational rest = b;
      for (std::size_t j = 0; j < k; ++j) rest -= a[j] * x[j];
      const Rational bound = rest / a[k];
      if (a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw InternalInconsistency("Fourier-Motzkin back-substitution failed");
    if (lo) {
      const Rational c = detail::ceil_q(*lo);
      x[k] = (!hi || c <= *hi) ? c : (*lo + *hi) / 2;
    } else if (hi) {
      x[k] = std::min(Rational(0), detail::floor_q(*hi));
    }
  }
  return x;
}

}  // namespace singlab
