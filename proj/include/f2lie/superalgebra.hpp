#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f2lie/grading.hpp"
#include "f2lie/lie_algebra.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

// S = ad(L) + C inside End(L). Coordinates 0..n-1 of S are ad(b_0)..ad(b_{n-1}),
// so L embeds as the first n coordinates; the rest span the new directions of C.
struct SuperAlgebra {
  LieAlgebra s;
  std::size_t base_dim = 0;
  Subspace s0;
  Subspace s1;
  // Echelon basis of S1 and the squares of its members (in S0).
  std::vector<Vec> odd_basis;
  std::vector<Vec> odd_squares;

  std::size_t dim() const { return s.dim(); }
  // s(x) for x in S1, extended from the basis by polarization.
  Vec square(Vec x) const;
};

SuperAlgebra superize(const LieAlgebra& l, const Z2Grading& g);

struct SuperReport {
  bool ok = true;
  std::vector<std::string> violations;
};

SuperReport check_super_axioms(const SuperAlgebra& s);

// Superideal: a Lie ideal I of S with s(I n S1) contained in I.
Subspace superideal_closure(const SuperAlgebra& s, std::span<const Vec> gens);
bool is_simple_super(const SuperAlgebra& s);
// Definition-level check over all nonzero vectors; dim S <= 24.
bool is_simple_super_exhaustive(const SuperAlgebra& s);

}  // namespace f2lie
