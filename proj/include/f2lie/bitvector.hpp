#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace f2lie {

// Packed coordinates of a vector of length <= 64: bit i holds coordinate i.
// Everything that lives inside a Lie algebra of dimension <= 64 uses this.
using Vec = std::uint64_t;

inline constexpr std::size_t kMaxPackedDim = 64;

inline constexpr Vec low_mask(std::size_t n) {
  return n >= 64 ? ~Vec{0} : ((Vec{1} << n) - 1);
}

inline constexpr Vec unit(std::size_t i) { return Vec{1} << i; }

// Lexicographic order on packed vectors with coordinate 0 most significant.
inline constexpr bool lex_less(Vec a, Vec b) {
  const Vec diff = a ^ b;
  if (diff == 0) return false;
  const Vec first = diff & (~diff + 1);
  return (a & first) == 0;
}

// Renders the first n coordinates as "(1,0,1)".
std::string format_vec(Vec v, std::size_t n);

// Arbitrary-length GF(2) vector, word packed. Addition is XOR.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector from_word(Vec word, std::size_t length);
  // Accepts "101" or "(1,0,1)"; whitespace and commas are ignored.
  static BitVector parse(std::string_view text);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool is_zero() const;
  std::size_t popcount() const;
  // Index of the lowest nonzero coordinate, or size() if zero.
  std::size_t leading_index() const;

  // Only valid for size() <= 64.
  Vec to_word() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator+=(const BitVector& other) { return *this ^= other; }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  // Lexicographic, coordinate 0 most significant; shorter vectors first.
  std::strong_ordering operator<=>(const BitVector& other) const;

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace f2lie
