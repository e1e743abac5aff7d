#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrm {

// Dense vector over F2 of arbitrary length, packed into 64-bit words.
// Bits past size() in the last word are always kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector ones(std::size_t length);
  static BitVector from_positions(std::size_t length, std::span<const std::size_t> positions);
  // Characters '0'/'1', position 0 first.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t p) const { return (words_[p >> 6] >> (p & 63)) & 1u; }
  void set(std::size_t p, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (p & 63);
    if (value) {
      words_[p >> 6] |= mask;
    } else {
      words_[p >> 6] &= ~mask;
    }
  }
  void flip(std::size_t p) { words_[p >> 6] ^= std::uint64_t{1} << (p & 63); }
  void clear();

  std::size_t weight() const;
  bool any() const;
  bool none() const { return !any(); }
  // Index of the lowest set bit, or size() when none is set.
  std::size_t first_set() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector complement() const;

  // Parity of the overlap.
  bool dot(const BitVector& other) const;
  std::size_t overlap(const BitVector& other) const;
  bool is_subset_of(const BitVector& other) const;

  std::vector<std::size_t> positions() const;
  std::string to_string() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend bool operator<(const BitVector& a, const BitVector& b);

 private:
  void check_same_size(const BitVector& other) const;
  void trim();

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVector operator^(BitVector a, const BitVector& b);
BitVector operator&(BitVector a, const BitVector& b);
BitVector operator|(BitVector a, const BitVector& b);

// Componentwise product (AND).
inline BitVector wedge(const BitVector& a, const BitVector& b) { return a & b; }
inline std::size_t weight(const BitVector& w) { return w.weight(); }

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const;
};

}  // namespace qrm
