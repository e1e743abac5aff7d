#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrm/bitvec.h"

namespace qrm {

constexpr int kMaxM = 12;

void check_m(int m);

// Subset of {1, ..., m}, stored as a bitmask (bit i-1 for element i).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int m, std::initializer_list<int> members);
  IndexSet(int m, const std::vector<int>& members);
  static IndexSet from_mask(int m, std::uint32_t mask);
  static IndexSet full(int m) { return from_mask(m, (1u << m) - 1); }

  int m() const { return m_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return i >= 1 && i <= m_ && ((mask_ >> (i - 1)) & 1u); }
  bool is_subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }

  IndexSet complement() const { return from_mask(m_, ~mask_ & ((1u << m_) - 1)); }
  IndexSet operator|(const IndexSet& o) const { return from_mask(m_, mask_ | o.mask_); }
  IndexSet operator&(const IndexSet& o) const { return from_mask(m_, mask_ & o.mask_); }
  IndexSet operator-(const IndexSet& o) const { return from_mask(m_, mask_ & ~o.mask_); }

  // Ascending members.
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.m_ == b.m_ && a.mask_ == b.mask_; }
  // Lexicographic order of the sorted member lists.
  friend bool operator<(const IndexSet& a, const IndexSet& b);

 private:
  int m_ = 0;
  std::uint32_t mask_ = 0;
};

// All subsets of {1..m} of the given size, in lexicographic order.
std::vector<IndexSet> subsets_of_size(int m, int size);
// All subsets with size <= max_size, sizes ascending, lexicographic within a size.
std::vector<IndexSet> subsets_up_to(int m, int max_size);

// v_i: positions whose label has x_i = 1.
BitVector basis_vector(int i, int m);
// v_A = AND of v_a over a in A; v_{} is all-ones.
BitVector vector_from_set(const IndexSet& a);

// Permutation of the positions 0..2^m-1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> map);
  static Permutation identity(int m);

  int m() const { return m_; }
  std::size_t size() const { return map_.size(); }
  std::uint32_t operator()(std::uint32_t p) const { return map_[p]; }
  const std::vector<std::uint32_t>& map() const { return map_; }

  // (this * other)(p) = this(other(p)).
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  bool is_involution() const;
  bool is_identity() const;
  // M_pi w: the bit at position p moves to position pi(p).
  BitVector apply(const BitVector& w) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int m_ = 0;
  std::vector<std::uint32_t> map_;
};

inline BitVector apply_permutation(const Permutation& pi, const BitVector& w) { return pi.apply(w); }

// P(i, j): exchanges x_i and x_j in each label.
Permutation perm_P(int i, int j, int m);
// Q(i, j): flips x_i whenever x_j = 1.
Permutation perm_Q(int i, int j, int m);

// Ordered pairs (i, j) with all 2|K| indices distinct.
class PairSet {
 public:
  PairSet() = default;
  PairSet(int m, std::vector<std::pair<int, int>> pairs);

  int m() const { return m_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  IndexSet first() const;
  IndexSet second() const;
  // Sub-PairSet selected by bit t of mask for pair t.
  PairSet subset(std::uint32_t mask) const;
  std::string to_string() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

Permutation perm_Q(const PairSet& k);
inline Permutation perm_Q_of_K(const PairSet& k) { return perm_Q(k); }

// Every PairSet over {1..m}, pairs listed in increasing order of first index.
std::vector<PairSet> all_pair_sets(int m);

// Row space over F2 with a fixed elimination order (rows processed as listed).
class RowSpace {
 public:
  RowSpace() = default;
  RowSpace(std::size_t length, const std::vector<BitVector>& rows);

  std::size_t length() const { return length_; }
  std::size_t row_count() const { return row_count_; }
  std::size_t rank() const { return pivots_.size(); }

  bool contains(const BitVector& v) const;
  // Coefficients c over the listed rows with sum c_r row_r = v, or nullopt.
  std::optional<BitVector> decompose(const BitVector& v) const;

 private:
  struct Pivot {
    std::size_t column;
    BitVector row;
    BitVector combo;
  };
  // Reduces v in place; returns the combination used.
  BitVector reduce(BitVector& v) const;

  std::size_t length_ = 0;
  std::size_t row_count_ = 0;
  std::vector<Pivot> pivots_;
};

// Dense square matrix over F2 acting on column vectors; row r is a BitVector.
class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(std::size_t n);
  static F2Matrix identity(std::size_t n);
  static F2Matrix from_permutation(const Permutation& pi);

  std::size_t size() const { return rows_.size(); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }

  F2Matrix operator*(const F2Matrix& other) const;
  F2Matrix& operator+=(const F2Matrix& other);
  BitVector apply(const BitVector& w) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::vector<BitVector> rows_;
};

}  // namespace qrm
