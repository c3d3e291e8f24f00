#pragma once

// Sparse multivariate polynomials over Q whose coefficients may depend
// polynomially on a single deformation parameter t.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singlab/errors.hpp"

namespace singlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponents (A_1, ..., A_n) of a monomial z_1^A_1 ... z_n^A_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> e) : e_(e) { check(); }
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) { check(); }

  static ExponentVector unit(std::size_t n, std::size_t i, int power = 1) {
    ExponentVector v(n);
    v.e_.at(i) = power;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const std::vector<int>& entries() const noexcept { return e_; }

  int degree() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](int a) { return a == 0; });
  }

  /// True if this monomial divides `other`.
  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  ExponentVector operator-(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.check();
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  void check() const {
    for (int a : e_)
      if (a < 0) throw PreconditionError("negative exponent in ExponentVector");
  }

  std::vector<int> e_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// z_1 > z_2 > ... > z_n.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

/// Univariate polynomial in the deformation parameter with rational
/// coefficients; degree 0 is the plain rational case.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Rational& c) : c_{c} { normalize(); }  // NOLINT(implicit)
  Coefficient(long c) : Coefficient(Rational(c)) {}       // NOLINT(implicit)
  explicit Coefficient(std::vector<Rational> c) : c_(std::move(c)) { normalize(); }

  /// c * t^k
  static Coefficient monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Coefficient(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  Rational constant() const { return c_.empty() ? Rational(0) : c_[0]; }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Coefficient& operator+=(const Coefficient& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) { return *this += -o; }

  Coefficient operator-() const {
    Coefficient r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }

  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Coefficient(std::move(r));
  }

  bool operator==(const Coefficient& o) const { return c_ == o.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Which variable a hyperplane eliminates, and the linear form replacing it:
/// z_i = sum_{j != i} a_j z_j. `coefficients` has one entry per variable;
/// the entry at `index` is ignored.
struct HyperplaneSpec {
  std::size_t index = 0;
  std::vector<Rational> coefficients;
};

class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Coefficient, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars, std::optional<std::string> param = {})
      : vars_(std::move(vars)), param_(std::move(param)) {
    if (vars_.empty()) throw PreconditionError("a polynomial needs at least one variable");
  }

  /// Variables named z1..zn.
  static Polynomial in_vars(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return Polynomial(std::move(names));
  }

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::optional<std::string>& param() const noexcept { return param_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_parametric() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return !kv.second.is_constant(); });
  }

  /// Same variables and parameter name, no terms.
  Polynomial zero_like() const {
    Polynomial r;
    r.vars_ = vars_;
    r.param_ = param_;
    return r;
  }

  /// Adds c * z^e; equal monomials merge and zero sums are dropped.
  Polynomial& add_term(const ExponentVector& e, const Coefficient& c) {
    if (e.size() != nvars()) throw PreconditionError("exponent length differs from variable count");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Coefficient coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient{} : it->second;
  }

  bool has_constant_term() const { return terms_.count(ExponentVector(nvars())) != 0; }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a.zero_like();
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend Polynomial operator*(const Coefficient& s, const Polynomial& p) {
    Polynomial r = p.zero_like();
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }

  /// Equality of term maps; variable names are not compared.
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars() != nvars()) throw PreconditionError("polynomials live in different rings");
  }

  std::vector<std::string> vars_;
  std::optional<std::string> param_;
  TermMap terms_;
};

/// Exponent vectors with a nonzero coefficient.
inline std::set<ExponentVector> support(const Polynomial& p) {
  std::set<ExponentVector> s;
  for (const auto& [e, c] : p.terms()) s.insert(e);
  return s;
}

/// Formal partial derivative in z_i; the parameter is carried as part of the
/// coefficient.
inline Polynomial differentiate(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw PreconditionError("derivative index out of range");
  Polynomial r = p.zero_like();
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    ExponentVector d(e);
    d[i] -= 1;
    r.add_term(d, Coefficient(Rational(e[i])) * c);
  }
  return r;
}

/// Evaluates every coefficient at t = t0.
inline Polynomial specialize(const Polynomial& p, const Rational& t0) {
  Polynomial r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c(t0));
  return r;
}

/// Terms supported on the coordinate subspace spanned by `axes`, read as a
/// polynomial in those variables only (in increasing index order).
inline Polynomial restrict_to_axes(const Polynomial& p, const std::set<std::size_t>& axes) {
  if (axes.empty()) throw PreconditionError("restriction to an empty set of axes");
  std::vector<std::string> names;
  for (auto i : axes) {
    if (i >= p.nvars()) throw PreconditionError("axis index out of range");
    names.push_back(p.vars()[i]);
  }
  Polynomial r(std::move(names), p.param());
  for (const auto& [e, c] : p.terms()) {
    bool inside = true;
    std::vector<int> kept;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (axes.count(i))
        kept.push_back(e[i]);
      else if (e[i] != 0)
        inside = false;
    }
    if (inside) r.add_term(ExponentVector(std::move(kept)), c);
  }
  return r;
}

/// Replaces z_i by the hyperplane's linear form; the result has n-1 variables.
inline Polynomial substitute_hyperplane(const Polynomial& p, const HyperplaneSpec& h) {
  const std::size_t n = p.nvars();
  if (h.index >= n) throw PreconditionError("hyperplane variable out of range");
  if (h.coefficients.size() != n) throw PreconditionError("hyperplane needs one coefficient per variable");
  if (n < 2) throw PreconditionError("cannot cut a one-variable germ by a hyperplane");

  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j)
    if (j != h.index) names.push_back(p.vars()[j]);

  auto drop = [&](const ExponentVector& e) {
    std::vector<int> v;
    for (std::size_t j = 0; j < n; ++j)
      if (j != h.index) v.push_back(e[j]);
    return ExponentVector(std::move(v));
  };

  Polynomial form(names, p.param());
  for (std::size_t j = 0; j < n; ++j)
    if (j != h.index && h.coefficients[j] != 0)
      form.add_term(drop(ExponentVector::unit(n, j)), h.coefficients[j]);

  std::vector<Polynomial> powers;  // powers[k] = form^k
  Polynomial one(names, p.param());
  one.add_term(ExponentVector(n - 1), Rational(1));
  powers.push_back(one);

  Polynomial r(names, p.param());
  for (const auto& [e, c] : p.terms()) {
    const auto k = static_cast<std::size_t>(e[h.index]);
    while (powers.size() <= k) powers.push_back(powers.back() * form);
    Polynomial mono(names, p.param());
    mono.add_term(drop(e), c);
    r += mono * powers[k];
  }
  return r;
}

/// Lowest total degree over the support.
inline int multiplicity(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
  int m = p.terms().begin()->first.degree();
  for (const auto& [e, c] : p.terms()) m = std::min(m, e.degree());
  return m;
}

}  // namespace singlab
