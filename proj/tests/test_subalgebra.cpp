#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "f2lie/subalgebra.hpp"
#include "fixtures.hpp"

using namespace f2lie;
using f2lie::testing::l31;
using f2lie::testing::v3;

namespace {

std::vector<std::uint64_t> brute_counts(const LieAlgebra& l) {
  std::vector<std::uint64_t> c;
  for (const auto& layer : brute_force_subalgebras(l, 1u << 10)) c.push_back(layer.size());
  return c;
}

std::vector<LieAlgebra> small_algebras() {
  std::vector<LieAlgebra> out = {l31(), LieAlgebra::abelian(3), direct_sum(l31(), LieAlgebra::abelian(1)),
                                 tensor_extend(l31(), 2), direct_sum(l31(), l31()),
                                 LieAlgebra::from_brackets(4, {{0, 1, 0b0100}, {0, 2, 0b1000}})};
  std::mt19937_64 rng(99);
  while (out.size() < 16) {
    const std::size_t n = 4 + rng() % 2;
    std::vector<BracketEntry> br;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) br.push_back({i, j, rng() & low_mask(n)});
    auto l = LieAlgebra::from_brackets(n, br);
    if (validate_axioms(l).ok) out.push_back(l);
  }
  return out;
}

std::set<Subspace> rep_set(const SubalgebraLattice& lat) {
  std::set<Subspace> s;
  for (const auto& e : lat.entries) s.insert(e.rep);
  return s;
}

}  // namespace

TEST(Subalgebras, WorkedExample) {
  auto l = l31();
  auto lat = all_subalgebras(l, automorphism_group(l));
  ASSERT_TRUE(lat.complete);
  EXPECT_EQ(lat.orbit_counts(), (std::vector<std::size_t>{1, 3, 1, 1}));
  EXPECT_EQ(lat.maximal_counts(), (std::vector<std::size_t>{0, 0, 1, 0}));
  EXPECT_EQ(lat.weighted_counts(), (std::vector<std::uint64_t>{1, 7, 3, 1}));
  EXPECT_EQ(lat.member_of.size(), 12u);
  for (const auto& e : lat.entries) {
    EXPECT_TRUE(is_subalgebra(l, e.rep));
    EXPECT_EQ(6 % e.orbit_size, 0u);
    EXPECT_EQ(canonical_in_orbit(lat.group, e.rep), e.rep);
  }
}

TEST(Subalgebras, TrivialGroupCountsEverySubalgebra) {
  auto l = l31();
  auto lat = all_subalgebras(l, MatGroup::trivial(3));
  EXPECT_EQ(lat.entries.size(), 12u);
  EXPECT_EQ(lat.orbit_counts(), (std::vector<std::size_t>{1, 7, 3, 1}));
}

TEST(Subalgebras, AbelianPlaneHasFiveSubalgebras) {
  EXPECT_EQ(brute_counts(LieAlgebra::abelian(2)), (std::vector<std::uint64_t>{1, 3, 1}));
  auto lat = all_subalgebras(LieAlgebra::abelian(2), MatGroup::trivial(2));
  EXPECT_EQ(lat.entries.size(), 5u);
}

TEST(Subalgebras, TensorRowOfTableTwo) {
  auto l = tensor_extend(l31(), 2);
  auto lat = all_subalgebras(l, automorphism_group(l));
  auto c = lat.orbit_counts();
  EXPECT_EQ(std::vector<std::size_t>(c.begin() + 1, c.end() - 1),
            (std::vector<std::size_t>{5, 5, 3, 1, 0}));
  auto m = lat.maximal_counts();
  EXPECT_EQ(m, (std::vector<std::size_t>{0, 0, 0, 1, 1, 0, 0}));
}

TEST(Subalgebras, OracleAgreement) {
  for (const auto& l : small_algebras()) {
    auto brute = brute_counts(l);
    auto lat = all_subalgebras(l, automorphism_group(l));
    EXPECT_EQ(lat.weighted_counts(), brute) << l.dim();
    auto triv = all_subalgebras(l, MatGroup::trivial(l.dim()));
    std::uint64_t total = 0;
    for (auto x : brute) total += x;
    EXPECT_EQ(triv.entries.size(), total);
  }
}

TEST(Subalgebras, ShortcutAndGenericPathsAgree) {
  for (const auto& l : small_algebras()) {
    auto a = automorphism_group(l);
    SubalgebraOptions generic, shortcut;
    generic.submodule_codim = 0;
    shortcut.submodule_codim = 64;
    auto x = all_subalgebras(l, a, generic);
    auto y = all_subalgebras(l, a, shortcut);
    EXPECT_EQ(rep_set(x), rep_set(y));
    EXPECT_EQ(x.maximal_counts(), y.maximal_counts());
  }
}

TEST(Subalgebras, CanonicalUnderGeneratorPermutation) {
  auto l = direct_sum(l31(), l31());
  auto a = automorphism_group(l);
  auto gens = a.generators();
  std::reverse(gens.begin(), gens.end());
  // add redundant products so the generating set really differs
  if (gens.size() >= 2) gens.push_back(compose(gens[0], gens[1]));
  MatGroup b(l.dim(), gens);
  ASSERT_EQ(b.order(), a.order());
  EXPECT_EQ(rep_set(all_subalgebras(l, a)), rep_set(all_subalgebras(l, b)));
}

TEST(Subalgebras, RejectsNonAutomorphisms) {
  ColMatrix swap = {v3(0, 1, 0), v3(1, 0, 0), v3(0, 0, 1)};
  EXPECT_THROW(all_subalgebras(l31(), MatGroup(3, {swap})), std::invalid_argument);
}

TEST(Subalgebras, DimensionCapMarksPartial) {
  auto l = tensor_extend(l31(), 2);
  SubalgebraOptions opt;
  opt.max_dim = 2;
  auto lat = all_subalgebras(l, automorphism_group(l), opt);
  EXPECT_FALSE(lat.complete);
  auto c = lat.orbit_counts();
  EXPECT_EQ(c[1], 5u);
  EXPECT_EQ(c[2], 5u);
  EXPECT_EQ(c[3], 0u);
}

TEST(SubmodulesOver, Basics) {
  auto l = l31();
  auto full = submodules_over(l, Subspace::full(3));
  ASSERT_TRUE(full);
  EXPECT_EQ(full->size(), 1u);
  // ad(0) acts as zero, so every subspace is invariant
  auto zero = submodules_over(l, Subspace(3));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->size(), 16u);
  // under the whole of ad(L) a simple algebra has only the trivial ones
  auto whole = enumerate_submodules(l.ad_generators(), 3, 100);
  ASSERT_TRUE(whole);
  EXPECT_EQ(whole->size(), 2u);
  auto brute = brute_force_subalgebras(l);
  for (const auto& u : brute[2]) {
    auto p = submodules_over(l, u);
    ASSERT_TRUE(p);
    ASSERT_EQ(p->size(), 2u);
    EXPECT_EQ(p->front(), u);
    EXPECT_TRUE(p->back().is_full());
  }
  EXPECT_THROW(submodules_over(l, Subspace::span(3, {v3(1, 0, 0), v3(0, 1, 0)})),
               std::invalid_argument);
}

TEST(SubmodulesOver, MatchesInvariantSubspaceFilter) {
  auto l = tensor_extend(l31(), 2);
  auto lines = brute_force_subalgebras(l, 64)[1];
  for (std::size_t t = 0; t < lines.size(); t += 9) {
    const auto& u = lines[t];
    auto p = submodules_over(l, u, 100000);
    ASSERT_TRUE(p);
    std::vector<Subspace> expect;
    for (std::size_t k = 1; k <= 6; ++k)
      for_each_subspace(6, k, [&](const Subspace& s) {
        if (!s.contains(u)) return true;
        for (Vec b : s.basis())
          if (!s.contains(l.bracket(u.basis()[0], b))) return true;
        expect.push_back(s);
        return true;
      });
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(*p, expect);
  }
}

TEST(Hasse, WorkedExampleExpanded) {
  auto l = l31();
  auto lat = all_subalgebras(l, automorphism_group(l));
  auto h = expanded_hasse(lat);
  ASSERT_EQ(h.vertices.size(), 12u);
  std::vector<std::size_t> down(12, 0), up(12, 0);
  for (auto [x, y] : h.edges) {
    EXPECT_TRUE(h.vertices[y].contains(h.vertices[x]));
    ++up[x];
    ++down[y];
  }
  for (std::size_t v = 0; v < 12; ++v) {
    const auto d = h.vertices[v].dim();
    if (d == 2) EXPECT_EQ(down[v], 3u);
    if (d == 1) EXPECT_EQ(down[v], 1u);
    if (d == 3) EXPECT_EQ(down[v], 3u);  // the three maximal subalgebras
  }
  EXPECT_EQ(up[0], 7u);
  auto dot = hasse_dot(lat, h);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n') > 12, true);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("cluster_"), std::string::npos);
}

TEST(Hasse, OrbitEdgesRealizeContainment) {
  for (const auto& l : {l31(), tensor_extend(l31(), 2), direct_sum(l31(), l31())}) {
    auto lat = all_subalgebras(l, automorphism_group(l));
    auto edges = hasse_edges(lat);
    std::vector<bool> covered_by_top(lat.entries.size(), false), has_up(lat.entries.size(), false);
    for (const auto& e : edges) {
      const auto& lo = lat.entries[e.lower].rep;
      const auto& hi = lat.entries[e.upper].rep;
      EXPECT_TRUE(lat.group.contains(e.element));
      EXPECT_TRUE(hi.contains(lo.image(e.element)));
      EXPECT_LT(lo.dim(), hi.dim());
      if (hi.is_full()) covered_by_top[e.lower] = true;
      else has_up[e.lower] = true;
    }
    for (std::size_t i = 0; i < lat.entries.size(); ++i) {
      if (lat.entries[i].rep.is_full()) continue;
      EXPECT_EQ(lat.entries[i].maximal, covered_by_top[i] && !has_up[i]);
    }
  }
}

TEST(IsoTest, Basics) {
  auto l = l31();
  auto self = iso_test(l, l);
  ASSERT_TRUE(self);
  EXPECT_FALSE(iso_test(l, LieAlgebra::abelian(3)));
  EXPECT_FALSE(iso_test(l, tensor_extend(l, 2)));
  // a basis change gives an isomorphic table
  ColMatrix g = {v3(1, 1, 0), v3(0, 1, 0), v3(1, 0, 1)};
  auto gi = *invert(g);
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      br.push_back({i, j, cols::apply(gi, l.bracket(g[i], g[j]))});
  auto m = LieAlgebra::from_brackets(3, br);
  auto cert = iso_test(m, l);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(is_isomorphism(m, l, cert.matrix->transpose().columns()));
}

TEST(Subquotients, SmallCases) {
  auto l = l31();
  Identifier id = [&](const LieAlgebra& x) -> std::optional<std::string> {
    if (iso_test(x, l)) return "L_3_1";
    return std::nullopt;
  };
  auto lat = all_subalgebras(l, automorphism_group(l));
  auto r = simple_subquotients(l, lat, id);
  EXPECT_TRUE(r.ids.empty());
  EXPECT_TRUE(r.unidentified.empty());

  auto t = tensor_extend(l, 2);
  auto tl = all_subalgebras(t, automorphism_group(t));
  auto rt = simple_subquotients(t, tl, id);
  EXPECT_EQ(rt.ids, (std::set<std::string>{"L_3_1"}));
  EXPECT_TRUE(rt.unidentified.empty());

  auto s = direct_sum(l, l);
  auto sl = all_subalgebras(s, automorphism_group(s));
  EXPECT_EQ(simple_subquotients(s, sl, id).ids, (std::set<std::string>{"L_3_1"}));
}

TEST(Subquotients, MaximalIdealsOfDirectSum) {
  auto s = direct_sum(l31(), l31());
  auto ideals = maximal_ideals(s, Subspace::full(6));
  ASSERT_EQ(ideals.size(), 2u);
  for (const auto& i : ideals) {
    EXPECT_EQ(i.dim(), 3u);
    EXPECT_TRUE(is_ideal(s, i));
  }
}
