#include "f2lie/subspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace f2lie {

namespace {

Vec lowest_bit(Vec v) { return v & (~v + 1); }

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {
  if (ambient > kMaxPackedDim) throw std::length_error("Subspace: ambient dimension > 64");
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> vectors) {
  Subspace s(ambient);
  const Vec mask = low_mask(ambient);
  for (Vec v : vectors) {
    if (v & ~mask) throw std::invalid_argument("Subspace::span: vector outside ambient space");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.rows_.push_back(unit(i));
  s.pivots_ = low_mask(ambient);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  Vec hits = v & pivots_;
  if (!hits) return v;
  for (Vec r : rows_) {
    if (v & lowest_bit(r)) v ^= r;
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Vec r : other.rows_)
    if (reduce(r)) return false;
  return true;
}

bool Subspace::insert(Vec v) {
  v = reduce(v);
  if (!v) return false;
  const Vec p = lowest_bit(v);
  for (Vec& r : rows_)
    if (r & p) r ^= v;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), v,
                              [](Vec a, Vec b) { return lowest_bit(a) < lowest_bit(b); });
  rows_.insert(pos, v);
  pivots_ |= p;
  return true;
}

Vec Subspace::coordinates(Vec v) const {
  Vec coeff = 0;
  Vec rest = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rest & lowest_bit(rows_[i])) {
      coeff |= unit(i);
      rest ^= rows_[i];
    }
  }
  if (rest) throw std::invalid_argument("Subspace::coordinates: vector not in span");
  return coeff;
}

std::vector<Vec> Subspace::complement_units() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!(pivots_ & unit(i))) out.push_back(unit(i));
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  Subspace s = *this;
  for (Vec r : other.rows_) s.insert(r);
  return s;
}

Subspace Subspace::annihilator() const {
  Subspace s(ambient_);
  for (std::size_t f = 0; f < ambient_; ++f) {
    if (pivots_ & unit(f)) continue;
    Vec w = unit(f);
    for (Vec r : rows_)
      if (r & unit(f)) w |= lowest_bit(r);
    s.insert(w);
  }
  return s;
}

Subspace Subspace::intersection(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace::intersection: ambient mismatch");
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::image(std::span<const Vec> columns) const {
  if (columns.size() != ambient_) throw std::invalid_argument("Subspace::image: size mismatch");
  Subspace s(ambient_);
  for (Vec r : rows_) s.insert(cols::apply(columns, r));
  return s;
}

std::size_t Subspace::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ ambient_;
  for (Vec r : rows_) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string Subspace::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ", ";
    out += format_vec(rows_[i], ambient_);
  }
  return out + ">";
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ <=> b.ambient_;
  if (a.rows_.size() != b.rows_.size()) return a.rows_.size() <=> b.rows_.size();
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i] == b.rows_[i]) continue;
    return lex_less(a.rows_[i], b.rows_[i]) ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Subspace canonical_subspace(std::size_t ambient, std::span<const Vec> vectors) {
  return Subspace::span(ambient, vectors);
}

Subspace canonical_subspace(std::span<const BitVector> vectors) {
  if (vectors.empty()) return Subspace(0);
  const std::size_t n = vectors[0].size();
  std::vector<Vec> packed;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("canonical_subspace: mixed ambient dimensions");
    packed.push_back(v.to_word());
  }
  return Subspace::span(n, packed);
}

Subspace kernel_of_columns(std::span<const Vec> columns) {
  const std::size_t n = columns.size();
  // Echelon basis of images with the combination of columns producing each.
  std::vector<Vec> image_rows;
  std::vector<Vec> combos;
  Subspace ker(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = columns[j];
    Vec combo = unit(j);
    for (std::size_t r = 0; r < image_rows.size(); ++r) {
      if (v & lowest_bit(image_rows[r])) {
        v ^= image_rows[r];
        combo ^= combos[r];
      }
    }
    if (v) {
      image_rows.push_back(v);
      combos.push_back(combo);
    } else {
      ker.insert(combo);
    }
  }
  return ker;
}

Subspace kernel(const BitMatrix& m) {
  if (m.rows() <= 64 && m.cols() <= 64) return kernel_of_columns(m.columns());
  if (m.cols() > 64) throw std::length_error("kernel: more than 64 columns");
  auto red = rref(m);
  Subspace ker(m.cols());
  Vec pivot_set = 0;
  for (auto p : red.pivots) pivot_set |= unit(p);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_set & unit(f)) continue;
    Vec v = unit(f);
    for (std::size_t i = 0; i < red.rank; ++i)
      if (red.reduced.get(i, f)) v |= unit(red.pivots[i]);
    ker.insert(v);
  }
  return ker;
}

Subspace eigenspace_of_columns(std::span<const Vec> columns, bool lam) {
  std::vector<Vec> shifted(columns.begin(), columns.end());
  if (lam)
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] ^= unit(j);
  return kernel_of_columns(shifted);
}

Subspace eigenspace(const BitMatrix& m, bool lam) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace: matrix not square");
  if (m.rows() > 64) throw std::length_error("eigenspace: dimension > 64");
  return eigenspace_of_columns(m.columns(), lam);
}

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<Wide> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      row[j] = row[j - 1] + (Wide{1} << j) * row[j];
      if (row[j] > ~std::uint64_t{0}) throw std::overflow_error("gaussian_binomial overflow");
    }
  }
  return static_cast<std::uint64_t>(row[k]);
}

void for_each_subspace(std::size_t n, std::size_t k,
                       const std::function<bool(const Subspace&)>& visit) {
  if (n > kMaxPackedDim) throw std::length_error("for_each_subspace: n > 64");
  if (k > n) throw std::out_of_range("for_each_subspace: k out of range");
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    Vec pivot_set = 0;
    for (auto p : piv) pivot_set |= unit(p);
    // free positions per row: after its pivot, not another pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, column)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!(pivot_set & unit(c))) free.emplace_back(i, c);
    if (free.size() >= 64) throw std::length_error("for_each_subspace: too many subspaces");
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<Vec> rows(k);
      for (std::size_t i = 0; i < k; ++i) rows[i] = unit(piv[i]);
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask & (std::uint64_t{1} << b)) rows[free[b].first] |= unit(free[b].second);
      if (!visit(Subspace::span(n, rows))) return;
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t k) {
  std::vector<Subspace> out;
  for_each_subspace(n, k, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

BitVector WideSpan::reduce(BitVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) v ^= rows_[r];
  return v;
}

bool WideSpan::insert(const BitVector& v) {
  if (v.size() != length_) throw std::invalid_argument("WideSpan::insert: length mismatch");
  BitVector w = v;
  std::vector<bool> combo(inserted_ + 1, false);
  combo[inserted_] = true;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (w.get(pivots_[r])) {
      w ^= rows_[r];
      for (std::size_t i = 0; i < combos_[r].size(); ++i)
        if (combos_[r][i]) combo[i] = !combo[i];
    }
  }
  if (w.is_zero()) return false;
  rows_.push_back(std::move(w));
  pivots_.push_back(rows_.back().leading_index());
  combos_.push_back(std::move(combo));
  ++inserted_;
  return true;
}

std::optional<std::vector<bool>> WideSpan::express(const BitVector& v) const {
  if (v.size() != length_) throw std::invalid_argument("WideSpan::express: length mismatch");
  BitVector w = v;
  std::vector<bool> coeff(inserted_, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (w.get(pivots_[r])) {
      w ^= rows_[r];
      for (std::size_t i = 0; i < combos_[r].size(); ++i)
        if (combos_[r][i]) coeff[i] = !coeff[i];
    }
  }
  if (!w.is_zero()) return std::nullopt;
  return coeff;
}

}  // namespace f2lie
