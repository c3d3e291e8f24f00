#pragma once

// Dimension of O_n / (J + m^N) from the Macaulay matrix of truncated
// monomial multiples of the generators of J.
//
// The row span of { x^b g mod m^N : |b| + ord(g) < N } is exactly
// (J + m^N) / m^N, so the quotient dimension is (#monomials of degree < N)
// minus the rank. Columns are ordered by increasing degree and eliminated in
// that order, so a column is a pivot column iff its monomial is the lowest
// term of some element of the span. When every monomial of degree N-1 is a
// pivot, m^{N-1} lies in J + m^N, Nakayama gives m^{N-1} in J, and the
// dimension is the exact local quotient dimension.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/linalg.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

struct MacaulayFrame {
  int degree = 0;                              // truncation degree N
  std::vector<ExponentVector> basis;           // monomials of degree < N, column order
  std::size_t row_count = 0;
  std::size_t rank = 0;
  std::size_t dimension = 0;                   // basis.size() - rank
  bool certificate = false;                    // m^{N-1} in J + m^N
  std::vector<ExponentVector> standard_monomials;  // non-pivot columns
};

/// All monomials in n variables of total degree < N, by increasing degree
/// and decreasing lex within a degree.
inline std::vector<ExponentVector> monomials_below(std::size_t n, int N) {
  std::vector<ExponentVector> out;
  for (int d = 0; d < N; ++d) {
    // exponent vectors of degree d in decreasing lex order
    std::vector<ExponentVector> layer;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == n) {
        cur[i] = left;
        layer.emplace_back(cur);
        return;
      }
      for (int a = left; a >= 0; --a) {
        cur[i] = a;
        self(self, i + 1, left - a);
      }
    };
    rec(rec, 0, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace detail {

using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;  // sorted by column

inline void make_primitive(SparseRow& r) {
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*r - b*p, dropping cancelled entries.
inline SparseRow combine(const Integer& a, const SparseRow& r, const Integer& b, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Sparse fraction-free echelon form: each incoming row is cleared against
// existing pivots by integer cross-multiplication and kept primitive.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols) : pivots_(ncols) {}

  void insert(SparseRow r) {
    while (!r.empty()) {
      const auto col = r.front().first;
      auto& slot = pivots_[col];
      if (!slot) {
        make_primitive(r);
        slot = std::move(r);
        ++rank_;
        return;
      }
      const Integer& p0 = slot->front().second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), r.front().second.get_mpz_t());
      const Integer a = p0 / g, b = r.front().second / g;
      r = combine(a, r, b, *slot);
      if (!r.empty()) make_primitive(r);
    }
  }

  std::size_t rank() const { return rank_; }
  bool is_pivot(std::size_t col) const { return pivots_[col].has_value(); }

 private:
  std::vector<std::optional<SparseRow>> pivots_;
  std::size_t rank_ = 0;
};

// Integer multiple of p with coprime integer coefficients.
inline std::vector<std::pair<ExponentVector, Integer>> integer_terms(const Polynomial& p) {
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_constant()) throw PreconditionError("quotient dimension needs non-parametric generators");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.constant().get_den_mpz_t());
  }
  std::vector<std::pair<ExponentVector, Integer>> out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, Integer(c.constant() * den));
  return out;
}

struct MacaulayRows {
  std::vector<ExponentVector> basis;
  std::vector<SparseRow> rows;
};

inline MacaulayRows macaulay_rows(const std::vector<Polynomial>& gens, int N) {
  if (gens.empty()) throw PreconditionError("an ideal needs at least one generator");
  const std::size_t n = gens[0].nvars();
  MacaulayRows m;
  m.basis = monomials_below(n, N);
  std::map<ExponentVector, std::uint32_t> index;
  for (std::uint32_t i = 0; i < m.basis.size(); ++i) index.emplace(m.basis[i], i);

  for (const auto& g : gens) {
    if (g.nvars() != n) throw PreconditionError("generators live in different rings");
    if (g.is_zero()) continue;
    const auto terms = integer_terms(g);
    const int ord = multiplicity(g);
    for (const auto& shift : m.basis) {
      if (shift.degree() + ord >= N) break;  // basis is sorted by degree
      SparseRow row;
      for (const auto& [e, c] : terms) {
        const ExponentVector k = e + shift;
        if (k.degree() < N) row.emplace_back(index.at(k), c);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

}  // namespace detail

inline MacaulayFrame local_quotient_dim(const std::vector<Polynomial>& gens, int N) {
  if (N < 2) throw PreconditionError("truncation degree must be at least 2");
  auto m = detail::macaulay_rows(gens, N);
  MacaulayFrame f;
  f.degree = N;
  f.row_count = m.rows.size();

  // Rows with the lowest leading column first keep fill-in down.
  std::stable_sort(m.rows.begin(), m.rows.end(),
                   [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  detail::SparseEchelon ech(m.basis.size());
  for (auto& r : m.rows) ech.insert(std::move(r));

  f.rank = ech.rank();
  f.dimension = m.basis.size() - f.rank;
  f.certificate = true;
  for (std::size_t c = 0; c < m.basis.size(); ++c) {
    if (ech.is_pivot(c)) continue;
    f.standard_monomials.push_back(m.basis[c]);
    if (m.basis[c].degree() == N - 1) f.certificate = false;
  }
  f.basis = std::move(m.basis);
  return f;
}

/// Rank of the same Macaulay matrix by dense Bareiss elimination. Only
/// sensible for small frames; used as an independent check.
inline std::size_t macaulay_rank_dense(const std::vector<Polynomial>& gens, int N) {
  const auto m = detail::macaulay_rows(gens, N);
  IntegerMatrix dense(m.rows.size(), std::vector<Integer>(m.basis.size(), Integer(0)));
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i]) dense[i][c] = v;
  return bareiss_rank(std::move(dense));
}

}  // namespace singlab
