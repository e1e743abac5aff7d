#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrm/f2.h"

namespace qrm {

struct CodeParams {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t d;
};

CodeParams code_params(int m);
std::uint64_t binomial(int n, int r);

struct LogicalIndex {
  IndexSet set;
  int position = 0;  // 1-based canonical position
};

// B_1..B_{k/2}: the m/2-subsets containing 1 in lexicographic order;
// B_{i+k/2} is the complement of B_i.
std::vector<LogicalIndex> canonical_indices(int m);

// QRM(m): the self-dual CSS code with X and Z stabilizers v_A, |A| <= m/2 - 1,
// logical X(B) = X(v_B) and Z(B) = Z(v_{B^c}).
class QrmCode {
 public:
  explicit QrmCode(int m);

  int m() const { return m_; }
  std::size_t n() const { return std::size_t{1} << m_; }
  std::size_t k() const { return logicals_.size(); }
  std::uint64_t d() const { return std::uint64_t{1} << (m_ / 2); }

  // Ordered by |A| ascending then lexicographically. X and Z supports coincide.
  const std::vector<IndexSet>& stabilizer_labels() const { return labels_; }
  const std::vector<BitVector>& stabilizer_supports() const { return supports_; }
  std::size_t stabilizer_count() const { return 2 * supports_.size(); }

  const std::vector<LogicalIndex>& logical_indices() const { return logicals_; }
  const BitVector& logical_x(int position) const { return logical_x_.at(position - 1); }
  const BitVector& logical_z(int position) const { return logical_z_.at(position - 1); }

  // Both spellings resolve to the same canonical entry.
  const LogicalIndex& lookup(int position) const;
  const LogicalIndex& lookup(const IndexSet& b) const;

  // Row space of the stabilizer supports (shared by X and Z parts).
  const RowSpace& stabilizer_space() const { return *stab_space_; }
  // Row space over [stabilizer supports..., v_{B_1}, ..., v_{B_k}].
  const RowSpace& x_reduction_space() const { return *x_space_; }
  // Row space over [stabilizer supports..., v_{B_1^c}, ..., v_{B_k^c}].
  const RowSpace& z_reduction_space() const { return *z_space_; }

 private:
  int m_;
  std::vector<IndexSet> labels_;
  std::vector<BitVector> supports_;
  std::vector<LogicalIndex> logicals_;
  std::vector<BitVector> logical_x_;
  std::vector<BitVector> logical_z_;
  std::shared_ptr<const RowSpace> stab_space_;
  std::shared_ptr<const RowSpace> x_space_;
  std::shared_ptr<const RowSpace> z_space_;
};

struct ReducedGenerator {
  IndexSet label;
  IndexSet factors;  // indices i contributing a (1 + v_i) factor
  BitVector support;
};

// h_A = v_A AND prod (1 + v_i) over the c = m/2 - 1 - |A| smallest indices outside A.
// `empty_factors` overrides the factor set used for h_{} (size m/2 - 1).
std::vector<ReducedGenerator> weight_reduced_stabilizers(const QrmCode& code,
                                                         std::optional<IndexSet> empty_factors = std::nullopt);

}  // namespace qrm
