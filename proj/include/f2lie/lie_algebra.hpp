#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "f2lie/bitmatrix.hpp"
#include "f2lie/bitvector.hpp"
#include "f2lie/module.hpp"
#include "f2lie/subspace.hpp"

namespace f2lie {

// [b_i, b_j] = sum of b_k over the indices k set in `result`.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec result = 0;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

// Lie algebra over GF(2) of dimension <= 64 given by structure constants.
// table_[i*n + j] packs the coordinates of [b_i, b_j].
class LieAlgebra {
 public:
  LieAlgebra() = default;

  // Fills both (i,j) and (j,i) from the listed pairs; rejects i == j.
  static LieAlgebra from_brackets(std::size_t n, const std::vector<BracketEntry>& brackets,
                                  std::string label = {});
  // Raw table, no symmetrization; axioms are not checked.
  static LieAlgebra from_table(std::size_t n, std::vector<Vec> table, std::string label = {});
  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Vec basis_bracket(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  Vec bracket(Vec x, Vec y) const;
  // Column packed ad(x): column j is [x, b_j].
  ColMatrix ad(Vec x) const;
  const ColMatrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }
  const std::vector<ColMatrix>& ad_generators() const { return ad_basis_; }
  BitMatrix ad_matrix(Vec x) const;

  // Nonzero brackets with i < j, ascending.
  std::vector<BracketEntry> brackets() const;
  const std::vector<Vec>& table() const { return table_; }
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  void check(Vec x) const;
  void build_ad();

  std::size_t n_ = 0;
  std::vector<Vec> table_;
  std::vector<ColMatrix> ad_basis_;
  std::string label_;
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

AxiomReport validate_axioms(const LieAlgebra& l);

Subspace closure(const LieAlgebra& l, std::span<const Vec> gens);
Subspace closure(const LieAlgebra& l, const Subspace& start);
Subspace ideal_closure(const LieAlgebra& l, std::span<const Vec> gens);
// Ideal of v generated by the given vectors of v.
Subspace ideal_closure_in(const LieAlgebra& l, const Subspace& v, std::span<const Vec> gens);

bool is_subalgebra(const LieAlgebra& l, const Subspace& v);
// True when i is an ideal of the subalgebra v (i contained in v).
bool is_ideal_in(const LieAlgebra& l, const Subspace& v, const Subspace& i);
bool is_ideal(const LieAlgebra& l, const Subspace& i);

Subspace center(const LieAlgebra& l);
// Span of [a, b] with a in x, b in y.
Subspace bracket_space(const LieAlgebra& l, const Subspace& x, const Subspace& y);
Subspace derived(const LieAlgebra& l);
// The stable term of the lower central series of l.
Subspace lower_central_limit(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l, const Subspace& v);

// Nonabelian with irreducible adjoint module.
bool is_simple(const LieAlgebra& l);
// Definition-level check: ideal closure of every nonzero vector is l.
bool is_simple_exhaustive(const LieAlgebra& l);

// V/I in the basis obtained by echelonizing V modulo I.
LieAlgebra section(const LieAlgebra& l, const Subspace& v, const Subspace& i);
// The subalgebra v as an algebra in its echelon basis.
LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& v);

// Bit mask of the fixed irreducible polynomial of degree k used for GF(2^k),
// including the leading term; available for 2 <= k <= 6.
unsigned gf2k_modulus(std::size_t k);
// L tensor GF(2^k); b_i (x) t^a has index i*k + a.
LieAlgebra tensor_extend(const LieAlgebra& l, std::size_t k);
// Element x (x) 1 of the tensor extension.
Vec tensor_lift(const LieAlgebra& l, std::size_t k, Vec x);

struct MatrixLieClosure {
  LieAlgebra algebra;
  std::vector<BitMatrix> basis;
};

// Lie closure of square matrices under [A,B] = AB + BA.
MatrixLieClosure matrix_lie_closure(const std::vector<BitMatrix>& gens);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace f2lie
