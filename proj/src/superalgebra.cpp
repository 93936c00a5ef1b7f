#include "f2lie/superalgebra.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace f2lie {

Vec SuperAlgebra::square(Vec x) const {
  const Vec c = s1.coordinates(x);
  Vec out = 0;
  for (std::size_t i = 0; i < odd_basis.size(); ++i) {
    if (!(c & unit(i))) continue;
    out ^= odd_squares[i];
    for (std::size_t j = i + 1; j < odd_basis.size(); ++j)
      if (c & unit(j)) out ^= s.bracket(odd_basis[i], odd_basis[j]);
  }
  return out;
}

SuperAlgebra superize(const LieAlgebra& l, const Z2Grading& g) {
  const std::size_t n = l.dim();
  if (!center(l).is_zero()) throw std::invalid_argument("superize: algebra has nontrivial center");
  if (g.l0.ambient() != n || g.l1.ambient() != n)
    throw std::invalid_argument("superize: grading does not match algebra");

  WideSpan span(n * n);
  std::vector<BitMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back(l.ad_matrix(unit(i)));
    if (!span.insert(basis.back().flatten())) throw std::logic_error("superize: ad not injective");
  }
  std::vector<BitMatrix> odd_sq;
  for (Vec x : g.l1.basis()) {
    const auto a = l.ad_matrix(x);
    odd_sq.push_back(a * a);
    if (span.insert(odd_sq.back().flatten())) basis.push_back(odd_sq.back());
  }
  const std::size_t m = basis.size();
  if (m > kMaxPackedDim) throw std::length_error("superize: dimension > 64");
  auto coords = [&](const BitMatrix& x) {
    const auto c = span.express(x.flatten());
    if (!c) throw std::logic_error("superize: S is not closed under the bracket");
    Vec v = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((*c)[i]) v |= unit(i);
    return v;
  };
  std::vector<Vec> table(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec v = coords(basis[a] * basis[b] + basis[b] * basis[a]);
      table[a * m + b] = v;
      table[b * m + a] = v;
    }
  SuperAlgebra out;
  out.s = LieAlgebra::from_table(m, std::move(table), "super(" + l.label() + ")");
  out.base_dim = n;
  out.s0 = Subspace(m);
  for (Vec x : g.l0.basis()) out.s0.insert(x);
  for (std::size_t i = n; i < m; ++i) out.s0.insert(unit(i));
  out.s1 = Subspace(m);
  for (Vec x : g.l1.basis()) out.s1.insert(x);
  out.odd_basis.assign(out.s1.basis().begin(), out.s1.basis().end());
  for (const auto& sq : odd_sq) out.odd_squares.push_back(coords(sq));
  return out;
}

SuperReport check_super_axioms(const SuperAlgebra& sa) {
  SuperReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.violations.size() < 64) rep.violations.push_back(std::move(msg));
  };
  const LieAlgebra& s = sa.s;
  const std::size_t m = s.dim();
  if (!validate_axioms(s).ok) fail("S violates the Lie axioms");
  if (sa.s0.dim() + sa.s1.dim() != m || !sa.s0.intersection(sa.s1).is_zero())
    fail("S0 + S1 is not a direct decomposition of S");
  const Subspace* part[2] = {&sa.s0, &sa.s1};
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b)
      for (Vec x : part[a]->basis())
        for (Vec y : part[b]->basis())
          if (!part[(a + b) % 2]->contains(s.bracket(x, y)))
            fail("grading: [S" + std::to_string(a) + ",S" + std::to_string(b) + "] not in S" +
                 std::to_string((a + b) % 2));
  // S / L is abelian and no larger than L1
  const Subspace base = Subspace::span(m, [&] {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < sa.base_dim; ++i) v.push_back(unit(i));
    return v;
  }());
  for (std::size_t i = sa.base_dim; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!base.contains(s.basis_bracket(i, j))) fail("S/L is not abelian");
  if (m - sa.base_dim > sa.s1.dim()) fail("dim S - dim L exceeds dim L1");
  if (sa.odd_squares.size() != sa.odd_basis.size()) fail("squaring not given on the S1 basis");
  if (sa.square(0) != 0) fail("s(0) != 0");

  std::mt19937_64 rng(0xC0FFEEULL);
  std::vector<Vec> samples(sa.odd_basis.begin(), sa.odd_basis.end());
  const auto ob = sa.s1.basis();
  for (int t = 0; t < 64 && !ob.empty(); ++t) {
    Vec x = 0;
    for (Vec b : ob)
      if (rng() & 1) x ^= b;
    samples.push_back(x);
  }
  for (Vec x : samples) {
    const Vec sx = sa.square(x);
    if (!sa.s0.contains(sx)) fail("s(" + format_vec(x, m) + ") not in S0");
    const auto ax = s.ad(x);
    const auto lhs = s.ad(sx);
    if (lhs != cols::multiply(ax, ax)) fail("ad(s(x)) != ad(x)^2 at " + format_vec(x, m));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); j += 3) {
      const Vec x = samples[i], y = samples[j];
      if (s.bracket(x, y) != (sa.square(x ^ y) ^ sa.square(x) ^ sa.square(y)))
        fail("polarization fails at " + format_vec(x, m) + ", " + format_vec(y, m));
    }
  return rep;
}

Subspace superideal_closure(const SuperAlgebra& sa, std::span<const Vec> gens) {
  const std::size_t m = sa.dim();
  Subspace cur = spin(sa.s.ad_generators(), m, gens);
  while (true) {
    const Subspace odd = cur.intersection(sa.s1);
    Subspace next = cur;
    bool grew = false;
    for (Vec x : odd.basis()) grew |= next.insert(sa.square(x));
    if (!grew) return cur;
    cur = spin(sa.s.ad_generators(), next);
  }
}

namespace {

// Action of S on an ideal n, in coordinates of n's echelon basis.
std::vector<ColMatrix> restricted_action(const LieAlgebra& s, const Subspace& n) {
  std::vector<ColMatrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    ColMatrix m;
    for (Vec b : n.basis()) m.push_back(n.coordinates(s.bracket(unit(i), b)));
    out.push_back(std::move(m));
  }
  return out;
}

Vec from_coordinates(const Subspace& n, Vec c) {
  Vec v = 0;
  for (std::size_t i = 0; i < n.dim(); ++i)
    if (c & unit(i)) v ^= n.basis()[i];
  return v;
}

}  // namespace

bool is_simple_super(const SuperAlgebra& sa) {
  const LieAlgebra& s = sa.s;
  const std::size_t m = s.dim();
  if (m == 0) return false;
  // Every nonzero superideal contains a minimal ideal of S, and a minimal ideal
  // lies either in the center or in the stable term of the lower central series.
  std::vector<Subspace> minimal;
  const Subspace z = center(s);
  for (Vec c = 1; c < unit(z.dim()); ++c) minimal.push_back(Subspace::span(m, {from_coordinates(z, c)}));
  const Subspace n = lower_central_limit(s);
  if (!n.is_zero()) {
    const auto action = restricted_action(s, n);
    if (test_irreducible(action, n.dim()).irreducible) {
      minimal.push_back(n);
    } else {
      if (n.dim() > 24) throw std::length_error("is_simple_super: reducible ideal too large");
      for (const auto& sub : minimal_submodules(action, n.dim())) {
        std::vector<Vec> vs;
        for (Vec c : sub.basis()) vs.push_back(from_coordinates(n, c));
        minimal.push_back(Subspace::span(m, vs));
      }
    }
  }
  for (const auto& j : minimal) {
    const auto b = j.basis();
    if (!superideal_closure(sa, std::vector<Vec>(b.begin(), b.end())).is_full()) return false;
  }
  return true;
}

bool is_simple_super_exhaustive(const SuperAlgebra& sa) {
  const std::size_t m = sa.dim();
  if (m > 24) throw std::length_error("is_simple_super_exhaustive: dimension too large");
  for (Vec v = 1; v < unit(m); ++v) {
    const Vec g[1] = {v};
    if (!superideal_closure(sa, g).is_full()) return false;
  }
  return m > 0;
}

}  // namespace f2lie
