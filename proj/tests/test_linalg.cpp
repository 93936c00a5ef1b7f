#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "f2lie/bitmatrix.hpp"
#include "f2lie/gf2poly.hpp"
#include "f2lie/module.hpp"
#include "f2lie/subspace.hpp"
#include "fixtures.hpp"

using namespace f2lie;
using f2lie::testing::v3;

TEST(BitVector, ParseAndFormat) {
  auto v = BitVector::parse("(1,0,1)");
  EXPECT_EQ(v.size(), 3u);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(1));
  EXPECT_EQ(v.to_string(), "(1,0,1)");
  EXPECT_EQ(v.to_word(), v3(1, 0, 1));
  EXPECT_THROW(v.get(3), std::out_of_range);
}

TEST(BitVector, AdditionIsXor) {
  auto a = BitVector::parse("110");
  auto b = BitVector::parse("011");
  EXPECT_EQ((a + b).to_string(), "(1,0,1)");
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_THROW(a += BitVector(4), std::invalid_argument);
}

TEST(BitVector, LexOrderPutsCoordinateZeroFirst) {
  EXPECT_TRUE(lex_less(v3(0, 1, 1), v3(1, 0, 0)));
  EXPECT_TRUE(BitVector::parse("011") < BitVector::parse("100"));
  EXPECT_FALSE(lex_less(v3(1, 0, 0), v3(1, 0, 0)));
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(BitMatrix(3, 3)).rank, 0u);
  auto id = rref(BitMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.reduced, BitMatrix::identity(3));
  std::vector<std::string> rows = {"101", "110", "011"};
  auto r = rref(BitMatrix::parse(rows));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, IdempotentOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    BitMatrix m(5 + t % 4, 70 + t % 5);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (rng() & 1) m.set(r, c);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.rank, rank(m));
    for (std::size_t i = 1; i < once.pivots.size(); ++i)
      EXPECT_LT(once.pivots[i - 1], once.pivots[i]);
  }
}

TEST(BitMatrix, ProductAssociativeAndSelfSumZero) {
  std::mt19937_64 rng(11);
  auto random = [&](std::size_t r, std::size_t c) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() & 1) m.set(i, j);
    return m;
  };
  for (int t = 0; t < 20; ++t) {
    auto a = random(4, 7), b = random(7, 5), c = random(5, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a + a).is_zero());
  }
}

TEST(BitMatrix, InverseAndTranspose) {
  std::vector<std::string> rows = {"110", "011", "001"};
  auto m = BitMatrix::parse(rows);
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, BitMatrix::identity(3));
  std::vector<std::string> sing = {"110", "011", "101"};
  EXPECT_FALSE(inverse(BitMatrix::parse(sing)));
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(BitMatrix::from_columns(m.columns(), 3), m);
}

TEST(Eigenspace, IdentityAndNonSquare) {
  EXPECT_TRUE(eigenspace(BitMatrix::identity(3), true).is_full());
  EXPECT_TRUE(eigenspace(BitMatrix::identity(3), false).is_zero());
  EXPECT_THROW(eigenspace(BitMatrix(2, 3), false), std::invalid_argument);
}

TEST(Eigenspace, IdempotentMatrixSplits) {
  // projection onto the first two coordinates along (1,1,1)
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    ColMatrix m(4);
    for (auto& c : m) c = rng() & 0xF;
    auto m2 = cols::multiply(m, m);
    if (m2 != m) continue;
    auto e0 = eigenspace_of_columns(m, false);
    auto e1 = eigenspace_of_columns(m, true);
    EXPECT_TRUE(e0.intersection(e1).is_zero());
    EXPECT_EQ(e0.dim() + e1.dim(), 4u);
  }
}

TEST(Subspace, CanonicalCollapsesDuplicates) {
  auto s = Subspace::span(3, {v3(0, 1, 1), v3(0, 1, 1)});
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis()[0], v3(0, 1, 1));
}

TEST(Subspace, WorkedExampleCanonicalRepresentative) {
  const Vec u = v3(1, 0, 1);
  auto a = canonical_subspace(3, std::vector<Vec>{u, v3(0, 0, 1)});
  auto b = canonical_subspace(3, std::vector<Vec>{u, v3(0, 1, 1)});
  auto expected = std::vector<Vec>{v3(1, 0, 0), v3(0, 0, 1)};
  EXPECT_EQ(std::vector<Vec>(a.basis().begin(), a.basis().end()), expected);
  EXPECT_NE(a, b);
}

TEST(Subspace, CanonicalIsOrderAndRecombinationInvariant) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vec> vs(4);
    for (auto& v : vs) v = rng() & 0x3FF;
    auto s = canonical_subspace(10, vs);
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(canonical_subspace(10, shuffled), s);
    auto mixed = vs;
    for (std::size_t i = 1; i < mixed.size(); ++i) mixed[i] ^= mixed[i - 1];
    EXPECT_EQ(canonical_subspace(10, mixed), s);
    std::vector<Vec> again(s.basis().begin(), s.basis().end());
    EXPECT_EQ(canonical_subspace(10, again), s);
  }
}

TEST(Subspace, MixedAmbientThrows) {
  std::vector<BitVector> vs = {BitVector::parse("101"), BitVector::parse("1010")};
  EXPECT_THROW(canonical_subspace(vs), std::invalid_argument);
}

TEST(Subspace, IntersectionAndAnnihilatorBruteForce) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto a = Subspace::span(6, {rng() & 63, rng() & 63, rng() & 63});
    auto b = Subspace::span(6, {rng() & 63, rng() & 63});
    auto i = a.intersection(b);
    for (Vec v = 0; v < 64; ++v) EXPECT_EQ(i.contains(v), a.contains(v) && b.contains(v));
    auto ann = a.annihilator();
    EXPECT_EQ(ann.dim() + a.dim(), 6u);
    for (Vec w : ann.basis())
      for (Vec v : a.basis()) EXPECT_EQ(std::popcount(w & v) % 2, 0);
  }
}

TEST(EnumerateSubspaces, SmallCases) {
  EXPECT_EQ(enumerate_subspaces(3, 1).size(), 7u);
  EXPECT_EQ(enumerate_subspaces(3, 2).size(), 7u);
  auto zero = enumerate_subspaces(3, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  EXPECT_THROW(enumerate_subspaces(3, 4), std::out_of_range);
}

TEST(EnumerateSubspaces, CountsMatchGaussianBinomial) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto all = enumerate_subspaces(n, k);
      std::set<Subspace> distinct(all.begin(), all.end());
      EXPECT_EQ(distinct.size(), all.size());
      EXPECT_EQ(all.size(), gaussian_binomial(n, k)) << n << " " << k;
    }
}

TEST(EnumerateSubspaces, GaussianBinomialAgainstBruteForce) {
  // Count k-subsets of independent vectors, divided by |GL(k,2)|.
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<Subspace> seen;
      std::vector<Vec> pick(k, 1);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
          auto s = Subspace::span(n, pick);
          if (s.dim() == k) seen.insert(s);
          return;
        }
        for (Vec v = 1; v < unit(n); ++v) {
          pick[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      EXPECT_EQ(seen.size(), gaussian_binomial(n, k));
    }
}

TEST(Module, SpinAndIrreducibility) {
  // Companion matrix of x^4+x+1 acts irreducibly on GF(2)^4.
  ColMatrix c = {0b0010, 0b0100, 0b1000, 0b0011};
  std::vector<ColMatrix> gens = {c};
  EXPECT_TRUE(spin(gens, 4, 1).is_full());
  EXPECT_TRUE(test_irreducible(gens, 4).irreducible);
  // x^4+1 = (x+1)^4 is reducible
  ColMatrix d = {0b0010, 0b0100, 0b1000, 0b0001};
  std::vector<ColMatrix> gens2 = {d};
  auto r = test_irreducible(gens2, 4);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(r.witness->is_zero());
  EXPECT_FALSE(r.witness->is_full());
}

TEST(Module, LargeIrreducibilityMatchesBruteForce) {
  // Block-diagonal sums of companion matrices: irreducible iff a single block.
  auto companion = [](unsigned poly, std::size_t k) {
    ColMatrix m(k);
    for (std::size_t j = 0; j + 1 < k; ++j) m[j] = unit(j + 1);
    m[k - 1] = poly & low_mask(k);
    return m;
  };
  // x^17 + x^3 + 1 is irreducible
  auto big = companion((1u << 3) | 1u, 17);
  std::vector<ColMatrix> one = {big};
  EXPECT_TRUE(test_irreducible(one, 17).irreducible);
  auto small = companion(0b0011, 4);
  ColMatrix sum(21, 0);
  for (std::size_t j = 0; j < 17; ++j) sum[j] = big[j];
  for (std::size_t j = 0; j < 4; ++j) sum[17 + j] = small[j] << 17;
  std::vector<ColMatrix> two = {sum};
  auto r = test_irreducible(two, 21);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(spin(two, *r.witness), *r.witness);
}

TEST(Module, SubmoduleEnumeration) {
  // trivial action on GF(2)^3: every subspace is a submodule
  std::vector<ColMatrix> gens = {ColMatrix(3, 0)};
  auto subs = enumerate_submodules(gens, 3, 100);
  ASSERT_TRUE(subs);
  EXPECT_EQ(subs->size(), 16u);
  EXPECT_FALSE(enumerate_submodules(gens, 3, 10));
  EXPECT_EQ(minimal_submodules(gens, 3).size(), 7u);
}

TEST(Poly, FactorsAndIrreducibility) {
  EXPECT_TRUE(poly_is_irreducible(0b111));
  EXPECT_TRUE(poly_is_irreducible(0b1011));
  EXPECT_TRUE(poly_is_irreducible(0b10011));
  EXPECT_FALSE(poly_is_irreducible(0b10001));  // (x+1)^4
  EXPECT_FALSE(poly_is_irreducible(0b101));    // (x+1)^2
  // (x^2+x+1)^2 (x^3+x+1) x
  Poly f = poly_mul(poly_mul(poly_mul(0b111, 0b111), 0b1011), 0b10);
  auto fs = poly_irreducible_factors(f);
  EXPECT_EQ(fs, (std::vector<Poly>{0b10, 0b111, 0b1011}));
  // brute-force irreducibility of all polynomials up to degree 10
  for (Poly g = 2; g < 2048; ++g) {
    bool reducible = false;
    for (Poly a = 2; a < g && !reducible; ++a)
      if (poly_degree(a) <= poly_degree(g) / 2 && poly_mod(g, a) == 0) reducible = true;
    EXPECT_EQ(poly_is_irreducible(g), !reducible) << static_cast<unsigned>(g);
  }
}

TEST(Poly, CharpolyAnnihilatesMatrix) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 3 + t % 20;
    ColMatrix m(d);
    for (auto& c : m) c = rng() & low_mask(d);
    const Poly chi = charpoly(m);
    EXPECT_EQ(poly_degree(chi), static_cast<int>(d));
    for (Vec c : poly_eval(chi, m)) EXPECT_EQ(c, 0u);
  }
}
