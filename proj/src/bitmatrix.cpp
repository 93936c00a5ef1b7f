#include "f2lie/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace f2lie {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(words_for(cols)),
      data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    auto src = rows[r].words();
    std::copy(src.begin(), src.end(), m.row_span(r).begin());
  }
  return m;
}

BitMatrix BitMatrix::from_row_words(std::span<const Vec> rows, std::size_t cols) {
  if (cols > 64) throw std::length_error("BitMatrix::from_row_words: cols > 64");
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] & ~low_mask(cols))
      throw std::invalid_argument("BitMatrix::from_row_words: bits beyond cols");
    if (cols) m.data_[r] = rows[r];
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const Vec> columns, std::size_t rows) {
  if (rows > 64) throw std::length_error("BitMatrix::from_columns: rows > 64");
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Vec col = columns[c];
    if (col & ~low_mask(rows))
      throw std::invalid_argument("BitMatrix::from_columns: bits beyond rows");
    while (col) {
      const auto r = static_cast<std::size_t>(std::countr_zero(col));
      m.set(r, c);
      col &= col - 1;
    }
  }
  return m;
}

BitMatrix BitMatrix::parse(std::span<const std::string> rows) {
  std::vector<BitVector> parsed;
  for (const auto& line : rows) {
    std::string bits;
    for (char c : line) {
      if (c == '1') bits += '1';
      else if (c == '0' || c == '.') bits += '0';
    }
    parsed.push_back(BitVector::parse(bits));
  }
  return from_rows(parsed);
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get");
  return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set");
  auto& w = data_[r * words_per_row_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::flip");
  data_[r * words_per_row_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

BitVector BitMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("BitMatrix::row");
  BitVector v(cols_);
  auto src = row_span(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

std::span<const std::uint64_t> BitMatrix::row_span(std::size_t r) const {
  return {data_.data() + r * words_per_row_, words_per_row_};
}

std::span<std::uint64_t> BitMatrix::row_span(std::size_t r) {
  return {data_.data() + r * words_per_row_, words_per_row_};
}

Vec BitMatrix::row_word(std::size_t r) const {
  if (cols_ > 64) throw std::length_error("BitMatrix::row_word: cols > 64");
  if (r >= rows_) throw std::out_of_range("BitMatrix::row_word");
  return cols_ ? data_[r] : 0;
}

std::vector<Vec> BitMatrix::row_words() const {
  std::vector<Vec> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = row_word(r);
  return out;
}

std::vector<Vec> BitMatrix::columns() const {
  if (rows_ > 64) throw std::length_error("BitMatrix::columns: rows > 64");
  std::vector<Vec> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < words_per_row_; ++k) {
      std::uint64_t w = data_[r * words_per_row_ + k];
      while (w) {
        const auto b = static_cast<std::size_t>(std::countr_zero(w));
        out[k * 64 + b] |= unit(r);
        w &= w - 1;
      }
    }
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (auto w : data_)
    if (w) return false;
  return true;
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
  BitVector out(rows_);
  auto vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto rw = row_span(r);
    for (std::size_t k = 0; k < words_per_row_; ++k) acc ^= rw[k] & vw[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

Vec BitMatrix::apply(Vec v) const {
  if (cols_ > 64 || rows_ > 64) throw std::length_error("BitMatrix::apply: size > 64");
  if (v & ~low_mask(cols_)) throw std::invalid_argument("BitMatrix::apply: bits beyond cols");
  Vec out = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    if (std::popcount(data_[r] & v) & 1) out |= unit(r);
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < words_per_row_; ++k) {
      std::uint64_t w = data_[r * words_per_row_ + k];
      while (w) {
        const auto b = static_cast<std::size_t>(std::countr_zero(w));
        t.set(k * 64 + b, r);
        w &= w - 1;
      }
    }
  return t;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("BitMatrix: shape mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= other.data_[k];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix: shape mismatch in product");
  BitMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto dst = out.row_span(r);
    for (std::size_t k = 0; k < a.words_per_row_; ++k) {
      std::uint64_t w = a.data_[r * a.words_per_row_ + k];
      while (w) {
        const auto c = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
        auto src = b.row_span(c);
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] ^= src[j];
        w &= w - 1;
      }
    }
  }
  return out;
}

BitVector BitMatrix::flatten() const {
  BitVector v(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) v.set(r * cols_ + c);
  return v;
}

BitMatrix BitMatrix::unflatten(const BitVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("BitMatrix::unflatten: size mismatch");
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (v.get(r * cols + c)) m.set(r, c);
  return m;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res{m, 0, {}};
  BitMatrix& a = res.reduced;
  const std::size_t rows = a.rows();
  for (std::size_t c = 0; c < a.cols() && res.rank < rows; ++c) {
    std::size_t pivot = res.rank;
    while (pivot < rows && !a.get(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != res.rank) {
      auto x = a.row_span(pivot);
      auto y = a.row_span(res.rank);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row_span(res.rank);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == res.rank || !a.get(r, c)) continue;
      auto dst = a.row_span(r);
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= prow[k];
    }
    res.pivots.push_back(c);
    ++res.rank;
  }
  return res;
}

std::size_t rank(const BitMatrix& m) {
  if (m.cols() <= 64) return cols::rank(m.row_words());
  return rref(m).rank;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  BitMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (m.get(r, c)) aug.set(r, c);
    aug.set(r, n + r);
  }
  auto red = rref(aug);
  if (red.rank < n || (n && red.pivots[n - 1] != n - 1)) return std::nullopt;
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (red.reduced.get(r, n + c)) inv.set(r, c);
  return inv;
}

namespace cols {

std::vector<Vec> multiply(std::span<const Vec> a, std::span<const Vec> b) {
  std::vector<Vec> out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = apply(a, b[j]);
  return out;
}

std::size_t rank(std::span<const Vec> m) {
  std::vector<Vec> basis;
  basis.reserve(m.size());
  for (Vec v : m) {
    for (Vec b : basis)
      if (v & b & (~b + 1)) v ^= b;
    if (v) {
      const Vec low = v & (~v + 1);
      for (Vec& b : basis)
        if (b & low) b ^= v;
      basis.push_back(v);
    }
  }
  return basis.size();
}

}  // namespace cols

}  // namespace f2lie
