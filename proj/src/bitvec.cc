#include "qrm/bitvec.h"

#include <bit>
#include <stdexcept>

namespace qrm {

namespace {
std::size_t word_count(std::size_t length) { return (length + 63) / 64; }
}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  v.trim();
  return v;
}

BitVector BitVector::from_positions(std::size_t length, std::span<const std::size_t> positions) {
  BitVector v(length);
  for (std::size_t p : positions) {
    if (p >= length) throw std::out_of_range("BitVector position out of range");
    v.set(p);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector string must contain only 0 and 1");
    }
  }
  return v;
}

void BitVector::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return length_;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (length_ != other.length_) throw std::invalid_argument("BitVector length mismatch");
}

void BitVector::trim() {
  if (length_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector BitVector::complement() const {
  BitVector v = *this;
  for (auto& w : v.words_) w = ~w;
  v.trim();
  return v;
}

bool BitVector::dot(const BitVector& other) const { return overlap(other) & 1u; }

std::size_t BitVector::overlap(const BitVector& other) const {
  check_same_size(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t p = 0; p < length_; ++p) {
    if (get(p)) s[p] = '1';
  }
  return s;
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.length_ != b.length_) return a.length_ < b.length_;
  return a.words_ < b.words_;
}

BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

std::size_t BitVectorHash::operator()(const BitVector& v) const {
  std::size_t h = std::hash<std::size_t>{}(v.size());
  for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace qrm
