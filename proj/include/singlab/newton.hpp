#pragma once

// Newton polyhedra of germs: the compact faces of the convex hull of
// supp(f) + R^n_+, convenience, the volumes of the cone over the Newton
// boundary in every coordinate subspace, and the Newton number.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/fourier_motzkin.hpp"
#include "singlab/linalg.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

using Support = std::set<ExponentVector>;

/// A compact face of the Newton polyhedron. `weight` is a strictly positive
/// integer vector whose minimum over the support, `level`, is attained
/// exactly on `points`.
struct Face {
  int dim = 0;
  std::vector<ExponentVector> points;    // sorted
  std::vector<ExponentVector> vertices;  // sorted, subset of points
  std::vector<Integer> weight;
  Integer level;

  bool contains(const ExponentVector& p) const {
    return std::binary_search(points.begin(), points.end(), p);
  }

  bool operator==(const Face& o) const { return points == o.points; }
};

struct NewtonComplex {
  std::size_t nvars = 0;
  Support support;
  std::vector<std::vector<Face>> faces;  // faces[d] = compact faces of dimension d
  std::vector<ExponentVector> vertices;  // ver(f), sorted
  bool convenient = false;

  std::size_t face_count() const {
    std::size_t n = 0;
    for (const auto& f : faces) n += f.size();
    return n;
  }

  /// Compact faces as point sets, for comparing complexes.
  std::set<std::vector<ExponentVector>> point_sets() const {
    std::set<std::vector<ExponentVector>> s;
    for (const auto& layer : faces)
      for (const auto& f : layer) s.insert(f.points);
    return s;
  }
};

/// V_1..V_n: V_k sums the k-volumes of the cone over the Newton boundary
/// restricted to every k-dimensional coordinate subspace.
struct VolumeVector {
  std::vector<Rational> v;  // v[k-1] = V_k

  const Rational& operator[](std::size_t k) const { return v.at(k - 1); }
};

inline Integer dot(const std::vector<Integer>& w, const ExponentVector& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += w[i] * p[i];
  return s;
}

inline bool is_convenient(const Support& support) {
  if (support.empty()) return false;
  const std::size_t n = support.begin()->size();
  for (std::size_t i = 0; i < n; ++i) {
    bool hit = false;
    for (const auto& p : support) {
      bool on_axis = p[i] > 0;
      for (std::size_t j = 0; j < n && on_axis; ++j)
        if (j != i && p[j] != 0) on_axis = false;
      if (on_axis) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace detail {

// Points not dominated coordinatewise by another support point. Dominated
// points satisfy <w,q> > <w,q'> for every positive w, so they never lie on a
// compact face.
inline std::vector<ExponentVector> minimal_points(const Support& support) {
  std::vector<ExponentVector> out;
  for (const auto& q : support) {
    bool dominated = false;
    for (const auto& p : support) {
      if (p != q && p.divides(q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(q);
  }
  return out;
}

inline std::vector<Rational> difference(const ExponentVector& a, const ExponentVector& b) {
  std::vector<Rational> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Looks for a strictly positive w with <w,.> constant on `on` and strictly
// larger on `off`. Homogeneity lets the strict inequalities become >= 1.
inline std::optional<std::vector<Integer>> positive_selector(const std::vector<ExponentVector>& on,
                                                             const std::vector<ExponentVector>& off,
                                                             std::size_t n) {
  RationalMatrix eq;
  for (std::size_t i = 1; i < on.size(); ++i) eq.push_back(difference(on[i], on[0]));
  RationalMatrix basis;
  if (eq.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n, Rational(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = null_space(eq, n);
  }
  const std::size_t m = basis.size();
  if (m == 0) return std::nullopt;

  // w = sum_j u_j basis[j]
  auto pull_back = [&](const std::vector<Rational>& row) {
    std::vector<Rational> a(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += row[i] * basis[j][i];
      a[j] = s;
    }
    return a;
  };

  std::vector<LinearInequality> sys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    sys.push_back({pull_back(e), Rational(1)});
  }
  for (const auto& q : off) sys.push_back({pull_back(difference(q, on[0])), Rational(1)});

  auto u = fourier_motzkin_solve(sys, m);
  if (!u) return std::nullopt;

  std::vector<Rational> w(n, Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) w[i] += (*u)[j] * basis[j][i];

  Integer den = 1, g = 0;
  for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> wi(n);
  for (std::size_t i = 0; i < n; ++i) {
    wi[i] = Integer(w[i] * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), wi[i].get_mpz_t());
  }
  for (auto& x : wi) x /= g;
  return wi;
}

inline std::size_t affine_rank(const std::vector<ExponentVector>& pts) {
  RationalMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(difference(pts[i], pts[0]));
  return m.empty() ? 0 : rational_rank(std::move(m), pts[0].size());
}

// Calls fn on every k-subset of {0..n-1}.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Re-checks a face's weight certificate by direct scan of `support`.
inline bool certifies(const Face& face, const Support& support) {
  for (const auto& w : face.weight)
    if (w <= 0) return false;
  for (const auto& p : support) {
    const Integer v = dot(face.weight, p);
    if (v < face.level) return false;
    if ((v == face.level) != face.contains(p)) return false;
  }
  return true;
}

/// All compact faces of the Newton polyhedron of `support`.
///
/// Candidates are the traces of the support on affine hulls of affinely
/// independent subsets of the minimal points; a candidate is kept iff an
/// exact LP finds a strictly positive weight selecting it.
inline NewtonComplex newton_complex(const Support& support) {
  if (support.empty()) throw PreconditionError("empty support");
  const std::size_t n = support.begin()->size();
  for (const auto& p : support) {
    if (p.size() != n) throw PreconditionError("support points of mixed length");
    if (p.is_zero()) throw PreconditionError("support contains the origin (f(0) != 0)");
  }

  NewtonComplex cx;
  cx.nvars = n;
  cx.support = support;
  cx.convenient = is_convenient(support);
  cx.faces.resize(n);

  const auto pts = detail::minimal_points(support);
  std::set<std::vector<ExponentVector>> seen;

  for (std::size_t d = 0; d < n; ++d) {
    detail::for_each_subset(pts.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<ExponentVector> base;
      for (auto i : idx) base.push_back(pts[i]);
      if (detail::affine_rank(base) != d) return;

      std::vector<ExponentVector> on, off;
      for (const auto& q : pts) {
        auto ext = base;
        ext.push_back(q);
        (detail::affine_rank(ext) == d ? on : off).push_back(q);
      }
      if (!seen.insert(on).second) return;

      auto w = detail::positive_selector(on, off, n);
      if (!w) return;
      Face f;
      f.dim = static_cast<int>(d);
      f.points = on;
      f.weight = std::move(*w);
      f.level = dot(f.weight, on.front());
      if (!certifies(f, support)) throw InternalInconsistency("face weight does not certify its face");
      cx.faces[d].push_back(std::move(f));
    });
  }

  for (const auto& v : cx.faces[0]) cx.vertices.push_back(v.points.front());
  std::sort(cx.vertices.begin(), cx.vertices.end());
  for (auto& layer : cx.faces) {
    for (auto& f : layer) {
      for (const auto& v : cx.vertices)
        if (f.contains(v)) f.vertices.push_back(v);
    }
  }
  return cx;
}

inline std::vector<ExponentVector> vertices(const Support& support) {
  if (support.empty()) return {};
  return newton_complex(support).vertices;
}

/// f restricted to the terms on `face`. The face must come from the complex
/// of supp(f): its weight has to certify it against supp(f).
inline Polynomial face_polynomial(const Polynomial& f, const Face& face) {
  const auto supp = support(f);
  for (const auto& p : face.points)
    if (!supp.count(p)) throw PreconditionError("face is not from the complex of this polynomial");
  if (!certifies(face, supp)) throw PreconditionError("face is not from the complex of this polynomial");
  Polynomial r = f.zero_like();
  for (const auto& p : face.points) r.add_term(p, f.coefficient(p));
  return r;
}

namespace detail {

// Triangulates every face by fanning from its first vertex over the faces of
// one dimension less that avoid it. Returns, per face of layer `d`, its
// simplices as vertex lists.
class FanTriangulator {
 public:
  explicit FanTriangulator(const NewtonComplex& cx) : cx_(cx) {}

  const std::vector<std::vector<ExponentVector>>& simplices(std::size_t d, std::size_t i) {
    auto key = std::make_pair(d, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Face& f = cx_.faces[d][i];
    std::vector<std::vector<ExponentVector>> out;
    if (d == 0) {
      out.push_back({f.points.front()});
    } else {
      const ExponentVector& apex = f.vertices.front();
      for (std::size_t j = 0; j < cx_.faces[d - 1].size(); ++j) {
        const Face& g = cx_.faces[d - 1][j];
        if (g.contains(apex)) continue;
        if (!std::includes(f.points.begin(), f.points.end(), g.points.begin(), g.points.end())) continue;
        for (auto s : simplices(d - 1, j)) {
          s.push_back(apex);
          out.push_back(std::move(s));
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const NewtonComplex& cx_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<ExponentVector>>> memo_;
};

// n-volume of the cone from the origin over the compact facets of a
// convenient support.
inline Rational cone_volume(const Support& support) {
  const auto cx = newton_complex(support);
  const std::size_t n = cx.nvars;
  FanTriangulator tri(cx);
  Integer total = 0;
  for (std::size_t i = 0; i < cx.faces[n - 1].size(); ++i) {
    for (const auto& s : tri.simplices(n - 1, i)) {
      IntegerMatrix m;
      for (const auto& v : s) m.emplace_back(v.begin(), v.end());
      total += abs(determinant(std::move(m)));
    }
  }
  Integer fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  Rational v(total, fact);
  v.canonicalize();
  return v;
}

inline Support restrict_support(const Support& support, const std::vector<std::size_t>& axes) {
  Support out;
  const std::size_t n = support.begin()->size();
  for (const auto& p : support) {
    std::vector<int> kept;
    bool inside = true;
    std::size_t a = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a < axes.size() && axes[a] == i) {
        kept.push_back(p[i]);
        ++a;
      } else if (p[i] != 0) {
        inside = false;
      }
    }
    if (inside) out.insert(ExponentVector(std::move(kept)));
  }
  return out;
}

}  // namespace detail

inline VolumeVector gamma_minus_volumes(const Support& support) {
  if (!is_convenient(support)) throw NonConvenient("support is not convenient; stabilize first");
  const std::size_t n = support.begin()->size();
  VolumeVector vv;
  vv.v.assign(n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& axes) {
      vv.v[k - 1] += detail::cone_volume(detail::restrict_support(support, axes));
    });
  }
  return vv;
}

/// n! V_n - (n-1)! V_{n-1} + ... + (-1)^{n-1} V_1 + (-1)^n
inline Integer newton_number_from_volumes(const VolumeVector& vv) {
  const std::size_t n = vv.v.size();
  Rational acc = (n % 2 == 0) ? 1 : -1;
  Integer fact = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= static_cast<unsigned long>(k);
    const Rational term = Rational(fact) * vv[k];
    acc += ((n - k) % 2 == 0) ? term : Rational(-term);
  }
  if (acc.get_den() != 1) throw InternalInconsistency("Newton number is not an integer");
  return acc.get_num();
}

inline Integer newton_number(const Support& support) {
  return newton_number_from_volumes(gamma_minus_volumes(support));
}

struct StabilizedNewtonNumber {
  Integer nu;
  bool padded = false;                    // some axis point was added
  std::optional<long> pad_degree;         // N at which the value settled
  std::vector<std::size_t> padded_axes;
};

/// Default ceiling on the padding degree, as a multiple of the first one.
inline constexpr long kStabilizationCapFactor = 1024;

/// Newton number of a possibly non-convenient support: each missed axis
/// gets the point N e_i, with N doubling from 1 + (max total degree) until
/// two consecutive values agree.
inline StabilizedNewtonNumber newton_number_stabilized(const Support& support,
                                                       long cap_factor = kStabilizationCapFactor) {
  if (support.empty()) throw PreconditionError("empty support");
  const std::size_t n = support.begin()->size();
  StabilizedNewtonNumber out;
  if (is_convenient(support)) {
    out.nu = newton_number(support);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_convenient(detail::restrict_support(support, {i}))) out.padded_axes.push_back(i);
  }
  out.padded = true;

  int max_deg = 0;
  for (const auto& p : support) max_deg = std::max(max_deg, p.degree());
  const long n0 = 1 + max_deg;
  auto padded_nu = [&](long N) {
    Support s = support;
    for (auto i : out.padded_axes) s.insert(ExponentVector::unit(n, i, static_cast<int>(N)));
    return newton_number(s);
  };

  long N = n0;
  Integer prev = padded_nu(N);
  while (N * 2 <= cap_factor * n0) {
    N *= 2;
    Integer cur = padded_nu(N);
    if (cur == prev) {
      out.nu = cur;
      out.pad_degree = N;
      return out;
    }
    prev = cur;
  }
  throw StabilizationFailure("Newton number did not stabilize up to padding degree " + std::to_string(N));
}

}  // namespace singlab
