#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qrm/f2.h"
#include "qrm/report.h"

namespace qrm {

// Classical Reed-Muller code RM(r, m), generated by v_A for |A| <= r.
class RMCode {
 public:
  RMCode(int r, int m);

  int r() const { return r_; }
  int m() const { return m_; }
  std::size_t length() const { return std::size_t{1} << m_; }
  std::size_t dimension() const { return generators_.size(); }
  const std::vector<IndexSet>& labels() const { return labels_; }
  const std::vector<BitVector>& generators() const { return generators_; }
  const RowSpace& space() const { return *space_; }
  bool contains(const BitVector& w) const { return space_->contains(w); }

 private:
  int r_;
  int m_;
  std::vector<IndexSet> labels_;
  std::vector<BitVector> generators_;
  std::shared_ptr<const RowSpace> space_;
};

// True when M_pi maps every generator of the code back into the code.
bool is_automorphism(const Permutation& pi, const RMCode& code);

// R(i, j) = M_Q(i,j) + I and R(K) = product over the pairs.
F2Matrix replacement_R(int i, int j, int m);
F2Matrix replacement_R(const PairSet& k);
// Sum over L subset of K of M_Q(L).
F2Matrix frak_Q(const PairSet& k);
// Sum over L subset of K of R(L).
F2Matrix frak_R(const PairSet& k);

// Closed-form prediction of R(K) v_A: v_{(A u F2(K)) \ F1(K)} when F1(K) is in A, zero otherwise.
BitVector predicted_RK_on_v(const PairSet& k, const IndexSet& a);

// Sweeps over the lemmas on R(K) and Q(K). With sample == 0 every K is visited;
// otherwise `sample` pair sets are drawn with the given seed.
CheckReport check_RK_on_v(int m, std::size_t sample = 0, std::uint64_t seed = 1);
CheckReport check_RK_QK_equiv(int m, std::size_t sample = 0, std::uint64_t seed = 1);
// Weight of v_A AND M_Q(K) v_A for |A| <= m/2 - 1 (divisible by 4) and for
// |B| = m/2 (0, 1, 2 or a multiple of 4 by the case split on B and K).
CheckReport check_phase_from_QK(int m, std::size_t sample = 0, std::uint64_t seed = 1);

// Pair sets to sweep: all of them, or a seeded sample drawn without replacement.
// A sample at least as large as the full family returns the full family.
std::vector<PairSet> pair_sets_for_sweep(int m, std::size_t sample, std::uint64_t seed);

}  // namespace qrm
