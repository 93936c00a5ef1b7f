#include <gtest/gtest.h>

#include <random>

#include "f2lie/lie_algebra.hpp"
#include "fixtures.hpp"

using namespace f2lie;
using f2lie::testing::l31;
using f2lie::testing::v3;

namespace {

Vec brute_force_closure_check(const LieAlgebra& l, const Subspace& s) {
  for (Vec a : s.basis())
    for (Vec b : s.basis())
      if (!s.contains(l.bracket(a, b))) return 1;
  return 0;
}

}  // namespace

TEST(LieAlgebra, WorkedExampleBrackets) {
  auto l = l31();
  EXPECT_EQ(l.bracket(unit(0), unit(1)), unit(2));
  EXPECT_EQ(l.bracket(unit(1), unit(2)), unit(0) | unit(1));
  EXPECT_EQ(l.bracket(unit(0), unit(2)), unit(0));
  for (Vec x = 0; x < 8; ++x) EXPECT_EQ(l.bracket(x, x), 0u);
  EXPECT_THROW(l.bracket(8, 1), std::invalid_argument);
}

TEST(LieAlgebra, AdjointMatrix) {
  auto l = l31();
  EXPECT_TRUE(l.ad_matrix(0).is_zero());
  EXPECT_EQ(l.ad(unit(0))[1], unit(2));
  for (Vec x = 0; x < 8; ++x) EXPECT_EQ(cols::apply(l.ad(x), x), 0u);
  // ad is a Lie homomorphism
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto lhs = l.ad_matrix(l.basis_bracket(i, j));
      auto a = l.ad_matrix(unit(i)), b = l.ad_matrix(unit(j));
      EXPECT_EQ(lhs, a * b + b * a);
    }
}

TEST(Axioms, ValidAndInvalid) {
  EXPECT_TRUE(validate_axioms(l31()).ok);
  EXPECT_TRUE(validate_axioms(LieAlgebra::abelian(4)).ok);
  auto table = l31().table();
  table[0 * 3 + 1] ^= unit(0);  // c_{01}^0 differs from c_{10}^0
  auto bad = validate_axioms(LieAlgebra::from_table(3, table));
  EXPECT_FALSE(bad.ok);
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_NE(bad.violations[0].find("antisymmetry"), std::string::npos);
  auto t2 = l31().table();
  t2[4] = unit(1);
  auto alt = validate_axioms(LieAlgebra::from_table(3, t2));
  EXPECT_FALSE(alt.ok);
  EXPECT_NE(alt.violations[0].find("alternating"), std::string::npos);
  // flip a structure constant symmetrically to break Jacobi
  auto t3 = l31().table();
  t3[1 * 3 + 2] ^= unit(2);
  t3[2 * 3 + 1] ^= unit(2);
  EXPECT_FALSE(validate_axioms(LieAlgebra::from_table(3, t3)).ok);
}

TEST(Closure, Examples) {
  auto l = l31();
  EXPECT_TRUE(closure(l, std::vector<Vec>{}).is_zero());
  auto v = closure(l, std::vector<Vec>{v3(1, 0, 1), v3(0, 0, 1)});
  EXPECT_EQ(std::vector<Vec>(v.basis().begin(), v.basis().end()),
            (std::vector<Vec>{v3(1, 0, 0), v3(0, 0, 1)}));
  EXPECT_TRUE(closure(l, std::vector<Vec>{1, 2, 4}).is_full());
  EXPECT_TRUE(closure(l, std::vector<Vec>{1, 2}).is_full());
}

TEST(Closure, OutputIsClosed) {
  auto l = direct_sum(l31(), l31());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vec> g = {rng() & 63, rng() & 63};
    auto s = closure(l, g);
    EXPECT_EQ(brute_force_closure_check(l, s), 0u);
    EXPECT_TRUE(s.contains(g[0]) && s.contains(g[1]));
  }
}

TEST(IdealClosure, Examples) {
  auto l = l31();
  EXPECT_TRUE(ideal_closure(l, std::vector<Vec>{}).is_zero());
  for (Vec v = 1; v < 8; ++v) EXPECT_TRUE(ideal_closure(l, std::vector<Vec>{v}).is_full());
  auto d = direct_sum(l31(), l31());
  auto first = ideal_closure(d, std::vector<Vec>{0b000011});
  EXPECT_EQ(first, Subspace::span(6, {1, 2, 4}));
  // brute force: the smallest ideal containing b0 among all ideals
  std::size_t best = 7;
  for (std::size_t k = 1; k <= 6; ++k)
    for (const auto& s : enumerate_subspaces(6, k))
      if (s.contains(1) && is_ideal(d, s)) best = std::min(best, s.dim());
  EXPECT_EQ(best, first.dim());
}

TEST(Simplicity, Examples) {
  EXPECT_TRUE(is_simple(l31()));
  EXPECT_TRUE(is_simple_exhaustive(l31()));
  EXPECT_FALSE(is_simple(LieAlgebra::abelian(2)));
  EXPECT_FALSE(is_simple(direct_sum(l31(), l31())));
  EXPECT_FALSE(is_simple_exhaustive(direct_sum(l31(), l31())));
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(l31()).is_zero());
  EXPECT_TRUE(center(LieAlgebra::abelian(3)).is_full());
  auto d = direct_sum(l31(), LieAlgebra::abelian(2));
  EXPECT_EQ(center(d), Subspace::span(5, {unit(3), unit(4)}));
}

TEST(Section, Basics) {
  auto l = l31();
  auto full = Subspace::full(3);
  auto whole = section(l, full, Subspace(3));
  EXPECT_EQ(whole, l);
  EXPECT_EQ(section(l, full, full).dim(), 0u);
  auto v = Subspace::span(3, {v3(1, 0, 0), v3(0, 0, 1)});
  auto q = section(l, v, Subspace::span(3, {v3(1, 0, 0)}));
  EXPECT_EQ(q.dim(), 1u);
  EXPECT_TRUE(validate_axioms(q).ok);
  EXPECT_THROW(section(l, Subspace::span(3, {1, 2}), Subspace(3)), std::invalid_argument);
  EXPECT_THROW(section(l, v, Subspace::span(3, {v3(0, 0, 1)})), std::invalid_argument);
}

TEST(Nilpotency, Examples) {
  auto l = l31();
  EXPECT_FALSE(is_nilpotent(l));
  for (Vec x = 1; x < 8; ++x) EXPECT_TRUE(is_nilpotent(l, Subspace::span(3, {x})));
  for (const auto& s : enumerate_subspaces(3, 2))
    if (is_subalgebra(l, s)) EXPECT_FALSE(is_nilpotent(l, s));
  EXPECT_THROW(is_nilpotent(l, Subspace::span(3, {1, 2})), std::invalid_argument);
}

TEST(TensorExtend, SimpleAndIdempotentLift) {
  auto l = l31();
  for (std::size_t k = 2; k <= 4; ++k) {
    auto t = tensor_extend(l, k);
    EXPECT_EQ(t.dim(), 3 * k);
    EXPECT_TRUE(validate_axioms(t).ok);
    EXPECT_TRUE(is_simple(t));
    if (t.dim() <= 12) EXPECT_TRUE(is_simple_exhaustive(t));
  }
  for (std::size_t k = 5; k <= 6; ++k) EXPECT_TRUE(is_simple(tensor_extend(l, k)));
}

TEST(MatrixLieClosure, Basics) {
  auto id = matrix_lie_closure({BitMatrix::identity(3)});
  EXPECT_EQ(id.algebra.dim(), 1u);
  EXPECT_TRUE(id.algebra.is_abelian());
  EXPECT_THROW(matrix_lie_closure({BitMatrix::identity(2), BitMatrix::identity(3)}),
               std::invalid_argument);
  // sl2 over GF(2) from e and f: [e,f] = h central, nilpotent
  std::vector<std::string> e = {"01", "00"}, f = {"00", "10"};
  auto sl2 = matrix_lie_closure({BitMatrix::parse(e), BitMatrix::parse(f)});
  EXPECT_EQ(sl2.algebra.dim(), 3u);
  EXPECT_TRUE(validate_axioms(sl2.algebra).ok);
  EXPECT_TRUE(is_nilpotent(sl2.algebra));
}

TEST(Jacobi, RandomElementsOfExtensions) {
  auto t = tensor_extend(l31(), 3);
  std::mt19937_64 rng(42);
  const Vec mask = low_mask(t.dim());
  for (int i = 0; i < 500; ++i) {
    Vec x = rng() & mask, y = rng() & mask, z = rng() & mask;
    EXPECT_EQ(t.bracket(t.bracket(x, y), z) ^ t.bracket(t.bracket(y, z), x) ^
                  t.bracket(t.bracket(z, x), y),
              0u);
  }
}
