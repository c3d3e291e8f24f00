#include <gtest/gtest.h>

#include <random>

#include "singlab/groebner.hpp"
#include "singlab/macaulay.hpp"
#include "test_support.hpp"

using namespace singlab;
using namespace singlab::testing;

namespace {

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> j;
  for (std::size_t i = 0; i < f.nvars(); ++i) j.push_back(differentiate(f, i));
  return j;
}

ExponentVector leading(const Polynomial& p) {
  ExponentVector best = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (DegRevLexGreater{}(e, best)) best = e;
  return best;
}

// Number of monomials outside the leading ideal, for a zero-dimensional
// ideal: the global quotient dimension.
std::size_t global_quotient_dim(const GroebnerBasis& gb, std::size_t n, int bound) {
  std::vector<ExponentVector> lead;
  for (const auto& g : gb.generators) lead.push_back(leading(g));
  std::size_t count = 0;
  for (const auto& m : monomials_below(n, bound)) {
    bool divisible = false;
    for (const auto& l : lead) divisible = divisible || l.divides(m);
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace

TEST(Groebner, ReducedBasisExamples) {
  const auto gb = groebner({P("x^2+y", kXY), P("x*y-1", kXY)});
  // x^2 + y and x y - 1 give x + y^2 after reduction
  for (const auto& g : gb.generators) EXPECT_TRUE(normal_form(g, gb).is_zero());
  EXPECT_TRUE(normal_form(P("x^2+y", kXY), gb).is_zero());
  EXPECT_TRUE(normal_form(P("x*y-1", kXY), gb).is_zero());
  EXPECT_FALSE(normal_form(P("x", kXY), gb).is_zero());
  EXPECT_FALSE(gb.is_unit());

  EXPECT_TRUE(groebner({P("x", kXY), P("x-1", kXY)}).is_unit());
}

TEST(Groebner, IdealMembershipOfCombinations) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(rng, 2, 3, 3);
    const auto b = random_poly(rng, 2, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto gb = groebner({a, b});
    const auto h1 = random_poly(rng, 2, 2, 2, true);
    const auto h2 = random_poly(rng, 2, 2, 2, true);
    EXPECT_TRUE(normal_form(h1 * a + h2 * b, gb).is_zero());
  }
}

TEST(Groebner, ContainsOne) {
  EXPECT_TRUE(contains_one({P("x", kXY), P("1-x*y", kXY)}));
  EXPECT_FALSE(contains_one({P("x", kXY), P("y", kXY)}));
  EXPECT_TRUE(contains_one({P("x^2+y^2+1", kXY), P("x", kXY), P("y", kXY)}));
}

TEST(Torus, RabinowitschExamples) {
  // x + y = 0 meets the torus at (1, -1)
  EXPECT_FALSE(empty_on_torus({P("x+y", kXY)}));
  EXPECT_TRUE(empty_on_torus({P("x*y", kXY)}));
  EXPECT_TRUE(empty_on_torus({P("x^2", kXY), P("y-1", kXY)}));
  EXPECT_FALSE(empty_on_torus({P("x^2-y^3", kXY), P("x-y", kXY)}));  // (1, 1)
}

TEST(Torus, UnaffectedByTorusRescaling) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_poly(rng, 2, 3, 3);
    if (a.is_zero()) continue;
    // x -> 2x, y -> -3y is an automorphism of the torus
    Polynomial scaled = a.zero_like();
    for (const auto& [e, c] : a.terms()) {
      Rational s = c.constant();
      for (int i = 0; i < e[0]; ++i) s *= 2;
      for (int i = 0; i < e[1]; ++i) s *= -3;
      scaled.add_term(e, s);
    }
    EXPECT_EQ(empty_on_torus({a}), empty_on_torus({scaled}));
  }
}

TEST(Macaulay, MonomialColumnOrder) {
  const auto m = monomials_below(2, 3);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_TRUE(m.front().is_zero());
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_LE(m[i - 1].degree(), m[i].degree());
  EXPECT_EQ(monomials_below(3, 4).size(), 20u);
}

TEST(Macaulay, SmallQuotients) {
  const auto morse = local_quotient_dim(jacobian(P("x^2+y^2", kXY)), 3);
  EXPECT_TRUE(morse.certificate);
  EXPECT_EQ(morse.dimension, 1u);

  const auto cusp = local_quotient_dim(jacobian(P("x^3+y^2", kXY)), 4);
  EXPECT_TRUE(cusp.certificate);
  EXPECT_EQ(cusp.dimension, 2u);

  const auto e6 = local_quotient_dim(jacobian(P("x^3+y^4", kXY)), 6);
  EXPECT_TRUE(e6.certificate);
  EXPECT_EQ(e6.dimension, 6u);

  // too shallow: x^2 is not yet in J + m^2 for the cusp
  EXPECT_FALSE(local_quotient_dim(jacobian(P("x^3+y^2", kXY)), 2).certificate);
  EXPECT_THROW(local_quotient_dim(jacobian(P("x^2", kXY)), 1), PreconditionError);
}

TEST(Macaulay, SparseRankMatchesDenseBareiss) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto f = random_poly(rng, n, 5, 4);
    if (f.is_zero() || f.has_constant_term()) continue;
    const auto j = jacobian(f);
    const int N = n == 2 ? 7 : 5;
    EXPECT_EQ(local_quotient_dim(j, N).rank, macaulay_rank_dense(j, N));
  }
  EXPECT_EQ(local_quotient_dim(jacobian(P(kAltmanBase)), 8).rank, macaulay_rank_dense(jacobian(P(kAltmanBase)), 8));
}

TEST(Macaulay, CertifiedDimensionIsStableInN) {
  for (const auto* text : {"x^3+y^4", "x^2*y+y^5", "x^5+y^5+x^2*y^2"}) {
    const auto j = jacobian(P(text, kXY));
    std::optional<std::size_t> first;
    for (int N = 2; N <= 16; ++N) {
      const auto fr = local_quotient_dim(j, N);
      if (!fr.certificate) {
        EXPECT_FALSE(first) << text << " lost its certificate at N=" << N;
        continue;
      }
      if (!first) first = fr.dimension;
      EXPECT_EQ(fr.dimension, *first) << text << " N=" << N;
    }
    EXPECT_TRUE(first) << text;
  }
}

TEST(Macaulay, MatchesGlobalDimensionForOriginOnlyJacobians) {
  // Brieskorn-Pham and weighted-homogeneous germs whose gradient vanishes
  // only at the origin: local and global quotients coincide.
  for (const auto* text : {"x^3+y^4+z^2", "x^3+y^3+z^3", "x^2*y+y^4+z^3", "x^5+y^6+z^5"}) {
    const auto f = P(text);
    const auto j = jacobian(f);
    const auto gb = groebner(j);
    const std::size_t global = global_quotient_dim(gb, 3, 20);
    std::optional<std::size_t> local;
    for (int N = 4; N <= 24 && !local; N += 2) {
      const auto fr = local_quotient_dim(j, N);
      if (fr.certificate) local = fr.dimension;
    }
    ASSERT_TRUE(local) << text;
    EXPECT_EQ(*local, global) << text;
  }
}
