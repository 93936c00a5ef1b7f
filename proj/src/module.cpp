#include "f2lie/module.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "f2lie/bitmatrix.hpp"
#include "f2lie/gf2poly.hpp"

namespace f2lie {

namespace {

constexpr std::size_t kBruteForceDim = 8;
constexpr int kAttempts = 200;

void check_gens(std::span<const ColMatrix> gens, std::size_t d) {
  if (d > kMaxPackedDim) throw std::length_error("module dimension > 64");
  for (const auto& g : gens)
    if (g.size() != d) throw std::invalid_argument("module generator has wrong size");
}

}  // namespace

ColMatrix transpose_cols(std::span<const Vec> m, std::size_t d) {
  ColMatrix t(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = m[j];
    while (col) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(col));
      t[i] |= unit(j);
      col &= col - 1;
    }
  }
  return t;
}

ColMatrix identity_cols(std::size_t d) {
  ColMatrix m(d);
  for (std::size_t j = 0; j < d; ++j) m[j] = unit(j);
  return m;
}

Subspace spin(std::span<const ColMatrix> gens, const Subspace& start) {
  Subspace s = start;
  std::vector<Vec> queue(start.basis().begin(), start.basis().end());
  for (std::size_t head = 0; head < queue.size() && !s.is_full(); ++head) {
    const Vec v = queue[head];
    for (const auto& g : gens) {
      const Vec w = cols::apply(g, v);
      if (s.insert(w)) queue.push_back(w);
    }
  }
  return s;
}

Subspace spin(std::span<const ColMatrix> gens, std::size_t d, std::span<const Vec> seeds) {
  check_gens(gens, d);
  return spin(gens, Subspace::span(d, seeds));
}

Subspace spin(std::span<const ColMatrix> gens, std::size_t d, Vec seed) {
  const Vec seeds[1] = {seed};
  return spin(gens, d, seeds);
}

IrreducibilityResult test_irreducible(std::span<const ColMatrix> gens, std::size_t d) {
  check_gens(gens, d);
  if (d == 0) return {false, std::nullopt};
  if (d == 1) return {true, std::nullopt};

  if (d <= kBruteForceDim) {
    for (Vec v = 1; v < unit(d); ++v) {
      auto s = spin(gens, d, v);
      if (!s.is_full()) return {false, s};
    }
    return {true, std::nullopt};
  }

  std::vector<ColMatrix> tgens;
  for (const auto& g : gens) tgens.push_back(transpose_cols(g, d));

  // Random elements of the enveloping algebra, grown by products.
  std::vector<ColMatrix> pool(gens.begin(), gens.end());
  pool.push_back(identity_cols(d));
  std::mt19937_64 rng(0x5eed1234abcdULL);

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    pool.push_back(cols::multiply(a, b));
    ColMatrix theta(d, 0);
    for (const auto& p : pool)
      if (rng() & 1)
        for (std::size_t j = 0; j < d; ++j) theta[j] ^= p[j];

    for (const Poly p : poly_irreducible_factors(charpoly(theta))) {
      const auto pt = poly_eval(p, theta);
      const auto null = kernel_of_columns(pt);
      if (null.dim() != static_cast<std::size_t>(poly_degree(p))) {
        for (Vec v : null.basis()) {
          auto s = spin(gens, d, v);
          if (!s.is_full()) return {false, s};
        }
        continue;
      }
      // null is simple as a module for theta, so one vector decides whether a
      // submodule meets it; otherwise the dual nullspace lies in its annihilator.
      auto s = spin(gens, d, null.basis().front());
      if (!s.is_full()) return {false, s};
      const auto tnull = kernel_of_columns(transpose_cols(pt, d));
      auto ds = spin(tgens, d, tnull.basis().front());
      if (!ds.is_full()) return {false, ds.annihilator()};
      return {true, std::nullopt};
    }
  }
  throw std::runtime_error("test_irreducible: no suitable element found");
}

std::optional<std::vector<Subspace>> enumerate_submodules(std::span<const ColMatrix> gens,
                                                          std::size_t d, std::size_t limit) {
  check_gens(gens, d);
  if (d > 24) throw std::length_error("enumerate_submodules: dimension too large");
  std::unordered_set<Subspace, SubspaceHash> cyclic_set;
  std::vector<Subspace> cyclic;
  for (Vec v = 1; v < unit(d); ++v) {
    auto s = spin(gens, d, v);
    if (cyclic_set.insert(s).second) {
      cyclic.push_back(s);
      if (cyclic.size() + 1 > limit) return std::nullopt;
    }
  }
  std::unordered_set<Subspace, SubspaceHash> all;
  std::vector<Subspace> queue;
  all.insert(Subspace(d));
  queue.push_back(Subspace(d));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Subspace x = queue[head];
    for (const auto& c : cyclic) {
      if (x.contains(c)) continue;
      auto y = x.sum(c);
      if (all.insert(y).second) {
        if (all.size() > limit) return std::nullopt;
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Subspace> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> minimal_submodules(std::span<const ColMatrix> gens, std::size_t d) {
  check_gens(gens, d);
  if (d > 24) throw std::length_error("minimal_submodules: dimension too large");
  std::set<Subspace> cyclic;
  for (Vec v = 1; v < unit(d); ++v) cyclic.insert(spin(gens, d, v));
  std::vector<Subspace> out;
  for (const auto& s : cyclic) {
    bool minimal = true;
    for (const auto& t : cyclic) {
      if (t.dim() >= s.dim()) break;
      if (s.contains(t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace f2lie
