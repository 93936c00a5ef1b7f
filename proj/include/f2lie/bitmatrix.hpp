#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f2lie/bitvector.hpp"

namespace f2lie {

// Dense GF(2) matrix, row-major, each row packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows);
  // Rows given as packed words; requires cols <= 64.
  static BitMatrix from_row_words(std::span<const Vec> rows, std::size_t cols);
  // Columns given as packed words; requires rows <= 64.
  static BitMatrix from_columns(std::span<const Vec> columns, std::size_t rows);
  // Rows are strings of 0/1 (or '.' for 0), as in printed matrices.
  static BitMatrix parse(std::span<const std::string> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  BitVector row(std::size_t r) const;
  std::span<const std::uint64_t> row_span(std::size_t r) const;
  std::span<std::uint64_t> row_span(std::size_t r);
  // Packed row, requires cols <= 64.
  Vec row_word(std::size_t r) const;
  std::vector<Vec> row_words() const;
  // Packed columns, requires rows <= 64.
  std::vector<Vec> columns() const;

  bool is_zero() const;

  BitVector apply(const BitVector& v) const;
  // Fast path for cols <= 64 and rows <= 64.
  Vec apply(Vec v) const;

  BitMatrix transpose() const;

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  // Flattens row-major into a vector of length rows*cols.
  BitVector flatten() const;
  static BitMatrix unflatten(const BitVector& v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
std::optional<BitMatrix> inverse(const BitMatrix& m);

// Column-packed square matrices of size <= 64. Column j is the image of e_j;
// used on the hot paths where ad-matrices and group elements act on Vec.
namespace cols {

inline Vec apply(std::span<const Vec> m, Vec v) {
  Vec out = 0;
  while (v) {
    const int j = __builtin_ctzll(v);
    out ^= m[static_cast<std::size_t>(j)];
    v &= v - 1;
  }
  return out;
}

// a * b
std::vector<Vec> multiply(std::span<const Vec> a, std::span<const Vec> b);
std::size_t rank(std::span<const Vec> m);

}  // namespace cols

}  // namespace f2lie
