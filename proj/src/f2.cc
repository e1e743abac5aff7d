#include "qrm/f2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qrm {

void check_m(int m) {
  if (m < 1 || m > kMaxM) throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxM) + "]");
}

IndexSet::IndexSet(int m, std::initializer_list<int> members) : IndexSet(m, std::vector<int>(members)) {}

IndexSet::IndexSet(int m, const std::vector<int>& members) : m_(m) {
  check_m(m);
  for (int i : members) {
    if (i < 1 || i > m) throw std::invalid_argument("index " + std::to_string(i) + " outside [1, m]");
    if (contains(i)) throw std::invalid_argument("duplicate index " + std::to_string(i));
    mask_ |= 1u << (i - 1);
  }
}

IndexSet IndexSet::from_mask(int m, std::uint32_t mask) {
  check_m(m);
  if (mask >> m) throw std::invalid_argument("mask has bits beyond m");
  IndexSet s;
  s.m_ = m;
  s.mask_ = mask;
  return s;
}

int IndexSet::size() const { return std::popcount(mask_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 1; i <= m_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return a.members() < b.members();
}

std::vector<IndexSet> subsets_of_size(int m, int size) {
  check_m(m);
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) == size) out.push_back(IndexSet::from_mask(m, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> subsets_up_to(int m, int max_size) {
  std::vector<IndexSet> out;
  for (int s = 0; s <= std::min(max_size, m); ++s) {
    auto layer = subsets_of_size(m, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BitVector basis_vector(int i, int m) {
  check_m(m);
  if (i < 1 || i > m) throw std::invalid_argument("basis index outside [1, m]");
  const std::size_t n = std::size_t{1} << m;
  BitVector v(n);
  for (std::size_t p = 0; p < n; ++p) {
    if ((p >> (i - 1)) & 1u) v.set(p);
  }
  return v;
}

BitVector vector_from_set(const IndexSet& a) {
  const std::size_t n = std::size_t{1} << a.m();
  BitVector v(n);
  for (std::size_t p = 0; p < n; ++p) {
    if ((p & a.mask()) == a.mask()) v.set(p);
  }
  return v;
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  const std::size_t n = map_.size();
  if (n < 2 || !std::has_single_bit(n)) throw std::invalid_argument("permutation length must be 2^m with m >= 1");
  m_ = std::countr_zero(n);
  check_m(m_);
  std::vector<bool> seen(n, false);
  for (auto q : map_) {
    if (q >= n || seen[q]) throw std::invalid_argument("map is not a permutation");
    seen[q] = true;
  }
}

Permutation Permutation::identity(int m) {
  check_m(m);
  std::vector<std::uint32_t> map(std::size_t{1} << m);
  for (std::uint32_t p = 0; p < map.size(); ++p) map[p] = p;
  return Permutation(std::move(map));
}

Permutation Permutation::after(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint32_t> map(size());
  for (std::uint32_t p = 0; p < size(); ++p) map[p] = map_[other.map_[p]];
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> map(size());
  for (std::uint32_t p = 0; p < size(); ++p) map[map_[p]] = p;
  return Permutation(std::move(map));
}

bool Permutation::is_involution() const {
  for (std::uint32_t p = 0; p < size(); ++p) {
    if (map_[map_[p]] != p) return false;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (std::uint32_t p = 0; p < size(); ++p) {
    if (map_[p] != p) return false;
  }
  return true;
}

BitVector Permutation::apply(const BitVector& w) const {
  if (w.size() != size()) throw std::invalid_argument("vector length does not match permutation");
  BitVector out(size());
  for (std::size_t p : w.positions()) out.set(map_[p]);
  return out;
}

namespace {
void check_pair(int i, int j, int m) {
  check_m(m);
  if (i < 1 || i > m || j < 1 || j > m || i == j) throw std::invalid_argument("pair indices must be distinct and in [1, m]");
}
}  // namespace

Permutation perm_P(int i, int j, int m) {
  check_pair(i, j, m);
  const std::uint32_t both = (1u << (i - 1)) | (1u << (j - 1));
  std::vector<std::uint32_t> map(std::size_t{1} << m);
  for (std::uint32_t p = 0; p < map.size(); ++p) {
    const bool xi = (p >> (i - 1)) & 1u;
    const bool xj = (p >> (j - 1)) & 1u;
    map[p] = xi != xj ? p ^ both : p;
  }
  return Permutation(std::move(map));
}

Permutation perm_Q(int i, int j, int m) {
  check_pair(i, j, m);
  std::vector<std::uint32_t> map(std::size_t{1} << m);
  for (std::uint32_t p = 0; p < map.size(); ++p) {
    map[p] = ((p >> (j - 1)) & 1u) ? p ^ (1u << (i - 1)) : p;
  }
  return Permutation(std::move(map));
}

PairSet::PairSet(int m, std::vector<std::pair<int, int>> pairs) : m_(m), pairs_(std::move(pairs)) {
  check_m(m);
  std::uint32_t used = 0;
  for (auto [i, j] : pairs_) {
    check_pair(i, j, m);
    const std::uint32_t bits = (1u << (i - 1)) | (1u << (j - 1));
    if (used & bits) throw std::invalid_argument("pairs in K must use distinct indices");
    used |= bits;
  }
}

IndexSet PairSet::first() const {
  std::uint32_t mask = 0;
  for (auto [i, j] : pairs_) mask |= 1u << (i - 1);
  return IndexSet::from_mask(m_, mask);
}

IndexSet PairSet::second() const {
  std::uint32_t mask = 0;
  for (auto [i, j] : pairs_) mask |= 1u << (j - 1);
  return IndexSet::from_mask(m_, mask);
}

PairSet PairSet::subset(std::uint32_t mask) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    if ((mask >> t) & 1u) out.push_back(pairs_[t]);
  }
  return PairSet(m_, std::move(out));
}

std::string PairSet::to_string() const {
  std::string s = "{";
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    if (t) s += ",";
    s += "(" + std::to_string(pairs_[t].first) + "," + std::to_string(pairs_[t].second) + ")";
  }
  return s + "}";
}

Permutation perm_Q(const PairSet& k) {
  Permutation pi = Permutation::identity(k.m());
  for (auto [i, j] : k.pairs()) pi = perm_Q(i, j, k.m()).after(pi);
  return pi;
}

namespace {
void extend_pair_sets(int m, std::uint32_t used, int min_first, std::vector<std::pair<int, int>>& current,
                      std::vector<PairSet>& out) {
  out.emplace_back(m, current);
  for (int i = min_first; i <= m; ++i) {
    if (used & (1u << (i - 1))) continue;
    for (int j = 1; j <= m; ++j) {
      if (j == i || (used & (1u << (j - 1)))) continue;
      current.emplace_back(i, j);
      extend_pair_sets(m, used | (1u << (i - 1)) | (1u << (j - 1)), i + 1, current, out);
      current.pop_back();
    }
  }
}
}  // namespace

std::vector<PairSet> all_pair_sets(int m) {
  check_m(m);
  std::vector<PairSet> out;
  std::vector<std::pair<int, int>> current;
  extend_pair_sets(m, 0, 1, current, out);
  return out;
}

RowSpace::RowSpace(std::size_t length, const std::vector<BitVector>& rows) : length_(length), row_count_(rows.size()) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != length) throw std::invalid_argument("row length mismatch");
    BitVector v = rows[r];
    BitVector combo = reduce(v);
    combo.flip(r);
    if (v.none()) continue;
    const std::size_t col = v.first_set();
    // Keep the basis fully reduced so each pivot column appears in exactly one row.
    for (auto& piv : pivots_) {
      if (piv.row.get(col)) {
        piv.row ^= v;
        piv.combo ^= combo;
      }
    }
    pivots_.push_back({col, std::move(v), std::move(combo)});
  }
}

BitVector RowSpace::reduce(BitVector& v) const {
  BitVector combo(row_count_);
  for (const auto& piv : pivots_) {
    if (v.get(piv.column)) {
      v ^= piv.row;
      combo ^= piv.combo;
    }
  }
  return combo;
}

bool RowSpace::contains(const BitVector& v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match row space");
  BitVector w = v;
  reduce(w);
  return w.none();
}

std::optional<BitVector> RowSpace::decompose(const BitVector& v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match row space");
  BitVector w = v;
  BitVector combo = reduce(w);
  if (w.any()) return std::nullopt;
  return combo;
}

F2Matrix::F2Matrix(std::size_t n) : rows_(n, BitVector(n)) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, true);
  return a;
}

F2Matrix F2Matrix::from_permutation(const Permutation& pi) {
  F2Matrix a(pi.size());
  for (std::uint32_t p = 0; p < pi.size(); ++p) a.set(pi(p), p, true);
  return a;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (size() != other.size()) throw std::invalid_argument("matrix size mismatch");
  F2Matrix out(size());
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c : rows_[r].positions()) out.rows_[r] ^= other.rows_[c];
  }
  return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
  if (size() != other.size()) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t r = 0; r < size(); ++r) rows_[r] ^= other.rows_[r];
  return *this;
}

BitVector F2Matrix::apply(const BitVector& w) const {
  if (w.size() != size()) throw std::invalid_argument("vector length does not match matrix");
  BitVector out(size());
  for (std::size_t r = 0; r < size(); ++r) {
    if (rows_[r].dot(w)) out.set(r);
  }
  return out;
}

}  // namespace qrm
