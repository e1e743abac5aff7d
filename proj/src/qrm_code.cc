#include "qrm/qrm_code.h"

#include <stdexcept>

namespace qrm {

namespace {
void check_even(int m) {
  if (m < 2 || m % 2 != 0 || m > kMaxM) {
    throw std::invalid_argument("m must be an even integer in [2, " + std::to_string(kMaxM) + "]");
  }
}
}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

CodeParams code_params(int m) {
  check_even(m);
  return {std::uint64_t{1} << m, binomial(m, m / 2), std::uint64_t{1} << (m / 2)};
}

std::vector<LogicalIndex> canonical_indices(int m) {
  check_even(m);
  std::vector<LogicalIndex> first;
  for (const auto& b : subsets_of_size(m, m / 2)) {
    if (b.contains(1)) first.push_back({b, 0});
  }
  std::vector<LogicalIndex> out;
  out.reserve(2 * first.size());
  for (const auto& li : first) out.push_back({li.set, static_cast<int>(out.size()) + 1});
  for (const auto& li : first) out.push_back({li.set.complement(), static_cast<int>(out.size()) + 1});
  return out;
}

QrmCode::QrmCode(int m) : m_(m) {
  check_even(m);
  labels_ = subsets_up_to(m, m / 2 - 1);
  for (const auto& a : labels_) supports_.push_back(vector_from_set(a));
  logicals_ = canonical_indices(m);
  for (const auto& li : logicals_) {
    logical_x_.push_back(vector_from_set(li.set));
    logical_z_.push_back(vector_from_set(li.set.complement()));
  }
  stab_space_ = std::make_shared<const RowSpace>(n(), supports_);
  std::vector<BitVector> rows = supports_;
  rows.insert(rows.end(), logical_x_.begin(), logical_x_.end());
  x_space_ = std::make_shared<const RowSpace>(n(), rows);
  rows = supports_;
  rows.insert(rows.end(), logical_z_.begin(), logical_z_.end());
  z_space_ = std::make_shared<const RowSpace>(n(), rows);
}

const LogicalIndex& QrmCode::lookup(int position) const {
  if (position < 1 || position > static_cast<int>(k())) {
    throw std::invalid_argument("logical position " + std::to_string(position) + " outside [1, k]");
  }
  return logicals_[position - 1];
}

const LogicalIndex& QrmCode::lookup(const IndexSet& b) const {
  for (const auto& li : logicals_) {
    if (li.set == b) return li;
  }
  throw std::invalid_argument("set " + b.to_string() + " is not a logical index of QRM(" + std::to_string(m_) + ")");
}

std::vector<ReducedGenerator> weight_reduced_stabilizers(const QrmCode& code, std::optional<IndexSet> empty_factors) {
  const int m = code.m();
  const int h = m / 2;
  if (empty_factors && (empty_factors->m() != m || empty_factors->size() != h - 1)) {
    throw std::invalid_argument("h_{} factor set must have m/2 - 1 indices");
  }
  std::vector<ReducedGenerator> out;
  for (const auto& a : code.stabilizer_labels()) {
    IndexSet factors = IndexSet::from_mask(m, 0);
    if (a.empty() && empty_factors) {
      factors = *empty_factors;
    } else {
      int c = h - 1 - a.size();
      for (int i = 1; i <= m && c > 0; ++i) {
        if (!a.contains(i)) {
          factors = factors | IndexSet(m, {i});
          --c;
        }
      }
    }
    BitVector support = vector_from_set(a);
    for (int i : factors.members()) support &= basis_vector(i, m).complement();
    out.push_back({a, factors, std::move(support)});
  }
  return out;
}

}  // namespace qrm
