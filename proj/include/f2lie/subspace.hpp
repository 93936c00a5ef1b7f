#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f2lie/bitmatrix.hpp"
#include "f2lie/bitvector.hpp"

namespace f2lie {

// Subspace of GF(2)^n, n <= 64, held as its unique reduced row-echelon basis.
// The pivot of a row is its lowest set bit (first nonzero coordinate); pivots
// increase down the basis and every pivot column is zero in all other rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);

  static Subspace span(std::size_t ambient, std::span<const Vec> vectors);
  static Subspace span(std::size_t ambient, std::initializer_list<Vec> vectors) {
    return span(ambient, std::span<const Vec>(vectors.begin(), vectors.size()));
  }
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }
  std::span<const Vec> basis() const { return rows_; }
  Vec pivot_mask() const { return pivots_; }

  // Reduces v against the basis; the result vanishes on every pivot.
  Vec reduce(Vec v) const;
  bool contains(Vec v) const { return reduce(v) == 0; }
  bool contains(const Subspace& other) const;

  // Adds v to the span. Returns false if v was already contained.
  bool insert(Vec v);

  // Coefficients of v in the stored basis (bit i for row i). v must lie in the span.
  Vec coordinates(Vec v) const;
  // Standard unit vectors off the pivots; together with the basis they span everything.
  std::vector<Vec> complement_units() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  // { w : <w,v> = 0 for all v } under the standard dot product.
  Subspace annihilator() const;
  // Image under a column-packed linear map of the ambient space.
  Subspace image(std::span<const Vec> columns) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  // Orders by dimension, then basis rows lexicographically (coordinate 0 first).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Vec pivots_ = 0;
  std::vector<Vec> rows_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

// Throws std::invalid_argument when the vectors do not all fit in ambient.
Subspace canonical_subspace(std::size_t ambient, std::span<const Vec> vectors);
Subspace canonical_subspace(std::span<const BitVector> vectors);

// Kernel of the map whose columns are given (each column has at most 64 rows).
Subspace kernel_of_columns(std::span<const Vec> columns);
Subspace kernel(const BitMatrix& m);
// { h : M h = lam h }. Throws on non-square M.
Subspace eigenspace(const BitMatrix& m, bool lam);
Subspace eigenspace_of_columns(std::span<const Vec> columns, bool lam);

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k);

// Visits every k-dimensional subspace of GF(2)^n once. Order: pivot sets in
// lexicographic order, free entries by binary counter. Stop by returning false.
void for_each_subspace(std::size_t n, std::size_t k,
                       const std::function<bool(const Subspace&)>& visit);
std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k);

// Echelon span of long GF(2) vectors, used where vectors exceed 64 bits.
class WideSpan {
 public:
  explicit WideSpan(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }

  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
  // Returns false if v was already contained.
  bool insert(const BitVector& v);
  // Coefficients of v w.r.t. the inserted generators (in insertion order), or
  // empty if v is not in the span.
  std::optional<std::vector<bool>> express(const BitVector& v) const;

 private:
  std::size_t length_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  // combos_[r] records which inserted generators sum to rows_[r].
  std::vector<std::vector<bool>> combos_;
  std::size_t inserted_ = 0;
};

}  // namespace f2lie
