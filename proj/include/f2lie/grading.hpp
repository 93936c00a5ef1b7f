#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f2lie/autgroup.hpp"
#include "f2lie/lie_algebra.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

// x with ad(x)^2 = ad(x).
struct Idempotent {
  Vec element = 0;
  bool central = false;
  friend bool operator==(const Idempotent&, const Idempotent&) = default;
};

struct IdempotentOptions {
  std::size_t max_dim = 26;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Exhaustive Gray-code scan; sorted by packed value.
std::vector<Idempotent> find_idempotents(const LieAlgebra& l, const IdempotentOptions& opt = {});
bool is_idempotent(const LieAlgebra& l, Vec x);

// L0 = ker ad(l), L1 = ker(ad(l) + 1).
struct Z2Grading {
  Subspace l0;
  Subspace l1;
  bool non_degenerate() const { return !l0.is_zero() && !l1.is_zero(); }
};

Z2Grading grading_from_idempotent(const LieAlgebra& l, Vec idempotent);
// Direct sum decomposition and [L_a, L_b] in L_{a+b}.
bool check_grading(const LieAlgebra& l, const Z2Grading& g, std::string* why = nullptr);

struct IdempotentOrbit {
  Vec representative = 0;  // least member
  std::size_t size = 0;
  std::size_t d0 = 0, d1 = 0;
};

// Orbits of the group on the non-central idempotents, by representative.
std::vector<IdempotentOrbit> idempotent_orbits(const LieAlgebra& l, const MatGroup& a,
                                               const std::vector<Idempotent>& idempotents);

struct SignatureCount {
  std::size_t count = 0;  // number of orbits
  std::size_t d0 = 0, d1 = 0;
  friend bool operator==(const SignatureCount&, const SignatureCount&) = default;
};

// Orbit counts grouped by [d0,d1], ascending by (d0,d1).
std::vector<SignatureCount> idempotent_orbit_summary(const LieAlgebra& l, const MatGroup& a);
std::vector<SignatureCount> summarize(const std::vector<IdempotentOrbit>& orbits);
// "1 x [1,2]" style, joined by ", ".
std::string format_summary(const std::vector<SignatureCount>& s);

}  // namespace f2lie
