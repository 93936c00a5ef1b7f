#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "f2lie/bitvector.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

// A module over GF(2) given by the action of generators on GF(2)^d, d <= 64.
// Each generator is column packed: gens[g][j] is the image of e_j.
using ColMatrix = std::vector<Vec>;

ColMatrix transpose_cols(std::span<const Vec> m, std::size_t d);
ColMatrix identity_cols(std::size_t d);

// Smallest subspace containing the seeds and invariant under every generator.
Subspace spin(std::span<const ColMatrix> gens, std::size_t d, std::span<const Vec> seeds);
Subspace spin(std::span<const ColMatrix> gens, std::size_t d, Vec seed);
Subspace spin(std::span<const ColMatrix> gens, const Subspace& start);

struct IrreducibilityResult {
  bool irreducible = false;
  // A proper nonzero submodule when the module is reducible.
  std::optional<Subspace> witness;
};

// Exact test: brute force over cyclic submodules for small d, otherwise the
// nullspace criterion with a deterministic search for a singular element of
// the enveloping algebra.
IrreducibilityResult test_irreducible(std::span<const ColMatrix> gens, std::size_t d);

// Every invariant subspace, sorted. Returns nullopt once more than limit exist.
std::optional<std::vector<Subspace>> enumerate_submodules(std::span<const ColMatrix> gens,
                                                          std::size_t d, std::size_t limit);

// Distinct cyclic submodules that contain no smaller nonzero submodule.
std::vector<Subspace> minimal_submodules(std::span<const ColMatrix> gens, std::size_t d);

}  // namespace f2lie
