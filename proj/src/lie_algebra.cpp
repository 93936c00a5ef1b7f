#include "f2lie/lie_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace f2lie {

namespace {

template <typename F>
void for_each_bit(Vec v, F&& f) {
  while (v) {
    f(static_cast<std::size_t>(std::countr_zero(v)));
    v &= v - 1;
  }
}

}  // namespace

LieAlgebra LieAlgebra::from_brackets(std::size_t n, const std::vector<BracketEntry>& brackets,
                                     std::string label) {
  if (n > kMaxPackedDim) throw std::length_error("LieAlgebra: dimension > 64");
  std::vector<Vec> table(n * n, 0);
  for (const auto& e : brackets) {
    if (e.i >= n || e.j >= n) throw std::out_of_range("LieAlgebra: bracket index out of range");
    if (e.i == e.j) throw std::invalid_argument("LieAlgebra: bracket of a basis vector with itself");
    if (e.result & ~low_mask(n)) throw std::out_of_range("LieAlgebra: bracket result out of range");
    table[e.i * n + e.j] ^= e.result;
    table[e.j * n + e.i] ^= e.result;
  }
  return from_table(n, std::move(table), std::move(label));
}

LieAlgebra LieAlgebra::from_table(std::size_t n, std::vector<Vec> table, std::string label) {
  if (n > kMaxPackedDim) throw std::length_error("LieAlgebra: dimension > 64");
  if (table.size() != n * n) throw std::invalid_argument("LieAlgebra: table size mismatch");
  LieAlgebra l;
  l.n_ = n;
  l.table_ = std::move(table);
  l.label_ = std::move(label);
  l.build_ad();
  return l;
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  return from_table(n, std::vector<Vec>(n * n, 0), "abelian(" + std::to_string(n) + ")");
}

void LieAlgebra::build_ad() {
  ad_basis_.assign(n_, ColMatrix(n_, 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) ad_basis_[i][j] = table_[i * n_ + j];
}

void LieAlgebra::check(Vec x) const {
  if (x & ~low_mask(n_)) throw std::invalid_argument("element does not belong to this algebra");
}

Vec LieAlgebra::bracket(Vec x, Vec y) const {
  check(x);
  check(y);
  Vec out = 0;
  for_each_bit(x, [&](std::size_t i) { out ^= cols::apply(ad_basis_[i], y); });
  return out;
}

ColMatrix LieAlgebra::ad(Vec x) const {
  check(x);
  ColMatrix m(n_, 0);
  for_each_bit(x, [&](std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) m[j] ^= ad_basis_[i][j];
  });
  return m;
}

BitMatrix LieAlgebra::ad_matrix(Vec x) const {
  const auto m = ad(x);
  return BitMatrix::from_columns(m, n_);
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j]) out.push_back({i, j, table_[i * n_ + j]});
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (Vec v : table_)
    if (v) return false;
  return true;
}

AxiomReport validate_axioms(const LieAlgebra& l) {
  AxiomReport rep;
  const std::size_t n = l.dim();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.violations.size() < 64) rep.violations.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < n; ++i)
    if (l.basis_bracket(i, i))
      fail("alternating: [b" + std::to_string(i) + ",b" + std::to_string(i) + "] = " +
           format_vec(l.basis_bracket(i, i), n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.basis_bracket(i, j) != l.basis_bracket(j, i))
        fail("antisymmetry: [b" + std::to_string(i) + ",b" + std::to_string(j) + "] != [b" +
             std::to_string(j) + ",b" + std::to_string(i) + "]");
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec bi = unit(i), bj = unit(j), bk = unit(k);
        const Vec s = l.bracket(l.basis_bracket(i, j), bk) ^ l.bracket(l.basis_bracket(j, k), bi) ^
                      l.bracket(l.basis_bracket(k, i), bj);
        if (s)
          fail("jacobi: (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ") gives " + format_vec(s, n));
      }
  return rep;
}

Subspace closure(const LieAlgebra& l, const Subspace& start) {
  Subspace s = start;
  std::vector<Vec> gens(start.basis().begin(), start.basis().end());
  for (std::size_t a = 0; a < gens.size() && !s.is_full(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const Vec w = l.bracket(gens[a], gens[b]);
      if (s.insert(w)) gens.push_back(w);
    }
  return s;
}

Subspace closure(const LieAlgebra& l, std::span<const Vec> gens) {
  return closure(l, Subspace::span(l.dim(), gens));
}

Subspace ideal_closure(const LieAlgebra& l, std::span<const Vec> gens) {
  return spin(l.ad_generators(), l.dim(), gens);
}

Subspace ideal_closure_in(const LieAlgebra& l, const Subspace& v, std::span<const Vec> gens) {
  std::vector<ColMatrix> ads;
  for (Vec b : v.basis()) ads.push_back(l.ad(b));
  return spin(ads, l.dim(), gens);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& v) {
  if (v.ambient() != l.dim()) return false;
  const auto b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!v.contains(l.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal_in(const LieAlgebra& l, const Subspace& v, const Subspace& i) {
  if (!v.contains(i)) return false;
  for (Vec x : v.basis())
    for (Vec y : i.basis())
      if (!i.contains(l.bracket(x, y))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& i) {
  return is_ideal_in(l, Subspace::full(l.dim()), i);
}

Subspace center(const LieAlgebra& l) {
  Subspace z = Subspace::full(l.dim());
  for (std::size_t j = 0; j < l.dim() && !z.is_zero(); ++j)
    z = z.intersection(kernel_of_columns(l.ad_basis(j)));
  return z;
}

Subspace bracket_space(const LieAlgebra& l, const Subspace& x, const Subspace& y) {
  Subspace s(l.dim());
  for (Vec a : x.basis())
    for (Vec b : y.basis()) s.insert(l.bracket(a, b));
  return s;
}

Subspace derived(const LieAlgebra& l) {
  const auto full = Subspace::full(l.dim());
  return bracket_space(l, full, full);
}

Subspace lower_central_limit(const LieAlgebra& l) {
  const auto full = Subspace::full(l.dim());
  Subspace c = full;
  while (true) {
    auto next = bracket_space(l, full, c);
    if (next == c) return c;
    c = std::move(next);
  }
}

bool is_nilpotent(const LieAlgebra& l, const Subspace& v) {
  if (!is_subalgebra(l, v)) throw std::invalid_argument("is_nilpotent: not a subalgebra");
  Subspace c = v;
  while (!c.is_zero()) {
    auto next = bracket_space(l, v, c);
    if (next == c) return false;
    c = std::move(next);
  }
  return true;
}

bool is_nilpotent(const LieAlgebra& l) { return is_nilpotent(l, Subspace::full(l.dim())); }

bool is_simple(const LieAlgebra& l) {
  if (l.dim() == 0 || l.is_abelian()) return false;
  return test_irreducible(l.ad_generators(), l.dim()).irreducible;
}

bool is_simple_exhaustive(const LieAlgebra& l) {
  if (l.dim() == 0 || l.is_abelian()) return false;
  if (l.dim() > 30) throw std::length_error("is_simple_exhaustive: dimension too large");
  for (Vec v = 1; v < unit(l.dim()); ++v) {
    const Vec g[1] = {v};
    if (!ideal_closure(l, g).is_full()) return false;
  }
  return true;
}

LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& v) {
  return section(l, v, Subspace(l.dim()));
}

LieAlgebra section(const LieAlgebra& l, const Subspace& v, const Subspace& i) {
  if (v.ambient() != l.dim() || i.ambient() != l.dim())
    throw std::invalid_argument("section: ambient mismatch");
  if (!is_subalgebra(l, v)) throw std::invalid_argument("section: V is not a subalgebra");
  if (!is_ideal_in(l, v, i)) throw std::invalid_argument("section: I is not an ideal of V");
  Subspace q(l.dim());
  for (Vec b : v.basis()) q.insert(i.reduce(b));
  const auto qb = q.basis();
  const std::size_t m = qb.size();
  std::vector<Vec> table(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = q.coordinates(i.reduce(l.bracket(qb[a], qb[b])));
  return LieAlgebra::from_table(m, std::move(table));
}

unsigned gf2k_modulus(std::size_t k) {
  switch (k) {
    case 2: return 0b111u;       // x^2+x+1
    case 3: return 0b1011u;      // x^3+x+1
    case 4: return 0b10011u;     // x^4+x+1
    case 5: return 0b100101u;    // x^5+x^2+1
    case 6: return 0b1000011u;   // x^6+x+1
    default: throw std::invalid_argument("gf2k_modulus: degree must be in 2..6");
  }
}

LieAlgebra tensor_extend(const LieAlgebra& l, std::size_t k) {
  const unsigned modulus = gf2k_modulus(k);
  const std::size_t n = l.dim();
  const std::size_t dim = n * k;
  if (dim > kMaxPackedDim) throw std::length_error("tensor_extend: dimension > 64");
  // t^e reduced, for e < 2k-1
  std::vector<unsigned> power(2 * k - 1);
  unsigned cur = 1;
  for (std::size_t e = 0; e < power.size(); ++e) {
    power[e] = cur;
    cur <<= 1;
    if (cur & (1u << k)) cur ^= modulus;
  }
  std::vector<Vec> table(dim * dim, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec br = l.basis_bracket(i, j);
      if (!br) continue;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) {
          Vec out = 0;
          for_each_bit(br, [&](std::size_t m) {
            for (std::size_t e = 0; e < k; ++e)
              if (power[a + c] & (1u << e)) out ^= unit(m * k + e);
          });
          table[(i * k + a) * dim + (j * k + c)] = out;
        }
    }
  std::string label = l.label().empty() ? std::string("L") : l.label();
  return LieAlgebra::from_table(dim, std::move(table),
                                label + " (x) GF(2^" + std::to_string(k) + ")");
}

Vec tensor_lift(const LieAlgebra& l, std::size_t k, Vec x) {
  if (x & ~low_mask(l.dim())) throw std::invalid_argument("tensor_lift: element out of range");
  Vec out = 0;
  for_each_bit(x, [&](std::size_t i) { out |= unit(i * k); });
  return out;
}

MatrixLieClosure matrix_lie_closure(const std::vector<BitMatrix>& gens) {
  if (gens.empty()) return {LieAlgebra::abelian(0), {}};
  const std::size_t m = gens[0].rows();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != m)
      throw std::invalid_argument("matrix_lie_closure: generators must be square of equal size");
  WideSpan span(m * m);
  std::vector<BitMatrix> basis;
  auto add = [&](const BitMatrix& x) {
    if (span.insert(x.flatten())) {
      basis.push_back(x);
      if (basis.size() > kMaxPackedDim)
        throw std::length_error("matrix_lie_closure: dimension > 64");
    }
  };
  for (const auto& g : gens) add(g);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) add(basis[a] * basis[b] + basis[b] * basis[a]);
  const std::size_t n = basis.size();
  std::vector<Vec> table(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto coeff = span.express((basis[a] * basis[b] + basis[b] * basis[a]).flatten());
      if (!coeff) throw std::logic_error("matrix_lie_closure: span not closed");
      Vec v = 0;
      for (std::size_t c = 0; c < n; ++c)
        if ((*coeff)[c]) v |= unit(c);
      table[a * n + b] = v;
      table[b * n + a] = v;
    }
  return {LieAlgebra::from_table(n, std::move(table)), std::move(basis)};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  if (n > kMaxPackedDim) throw std::length_error("direct_sum: dimension > 64");
  std::vector<Vec> table(n * n, 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) table[i * n + j] = a.basis_bracket(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      table[(i + a.dim()) * n + (j + a.dim())] = b.basis_bracket(i, j) << a.dim();
  return LieAlgebra::from_table(n, std::move(table), a.label() + " + " + b.label());
}

}  // namespace f2lie
