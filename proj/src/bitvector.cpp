#include "f2lie/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace f2lie {

std::string format_vec(Vec v, std::size_t n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += ((v >> i) & 1) ? '1' : '0';
  }
  out += ')';
  return out;
}

BitVector::BitVector(std::size_t length)
    : length_(length), words_((length + 63) / 64, 0) {}

BitVector BitVector::from_word(Vec word, std::size_t length) {
  if (length > 64) throw std::length_error("BitVector::from_word: length > 64");
  BitVector v(length);
  if (length) v.words_[0] = word & low_mask(length);
  return v;
}

BitVector BitVector::parse(std::string_view text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else if (c != ',' && c != '(' && c != ')' && c != ' ' && c != '\t') {
      throw std::invalid_argument("BitVector::parse: unexpected character");
    }
  }
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v.set(i);
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("BitVector::get: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("BitVector::set: index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

void BitVector::flip(std::size_t i) {
  if (i >= length_) throw std::out_of_range("BitVector::flip: index out of range");
  words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

bool BitVector::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::leading_index() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return length_;
}

Vec BitVector::to_word() const {
  if (length_ > 64) throw std::length_error("BitVector::to_word: length > 64");
  return words_.empty() ? 0 : words_[0];
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_)
    throw std::invalid_argument("BitVector: length mismatch in addition");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (length_ != other.length_) return length_ <=> other.length_;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] == other.words_[k]) continue;
    return lex_less(words_[k], other.words_[k]) ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string BitVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < length_; ++i) {
    if (i) out += ',';
    out += get(i) ? '1' : '0';
  }
  out += ')';
  return out;
}

}  // namespace f2lie
