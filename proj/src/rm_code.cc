#include "qrm/rm_code.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qrm {

RMCode::RMCode(int r, int m) : r_(r), m_(m) {
  check_m(m);
  if (r < 0 || r > m) throw std::invalid_argument("RM order r must lie in [0, m]");
  labels_ = subsets_up_to(m, r);
  generators_.reserve(labels_.size());
  for (const auto& a : labels_) generators_.push_back(vector_from_set(a));
  space_ = std::make_shared<const RowSpace>(length(), generators_);
}

bool is_automorphism(const Permutation& pi, const RMCode& code) {
  if (pi.size() != code.length()) throw std::invalid_argument("permutation length does not match code");
  for (const auto& g : code.generators()) {
    if (!code.contains(pi.apply(g))) return false;
  }
  return true;
}

F2Matrix replacement_R(int i, int j, int m) {
  F2Matrix r = F2Matrix::from_permutation(perm_Q(i, j, m));
  r += F2Matrix::identity(std::size_t{1} << m);
  return r;
}

F2Matrix replacement_R(const PairSet& k) {
  F2Matrix r = F2Matrix::identity(std::size_t{1} << k.m());
  for (auto [i, j] : k.pairs()) r = r * replacement_R(i, j, k.m());
  return r;
}

F2Matrix frak_Q(const PairSet& k) {
  F2Matrix sum(std::size_t{1} << k.m());
  for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) {
    sum += F2Matrix::from_permutation(perm_Q(k.subset(mask)));
  }
  return sum;
}

F2Matrix frak_R(const PairSet& k) {
  F2Matrix sum(std::size_t{1} << k.m());
  for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) sum += replacement_R(k.subset(mask));
  return sum;
}

BitVector predicted_RK_on_v(const PairSet& k, const IndexSet& a) {
  if (!k.first().is_subset_of(a)) return BitVector(std::size_t{1} << a.m());
  return vector_from_set((a | k.second()) - k.first());
}

std::vector<PairSet> pair_sets_for_sweep(int m, std::size_t sample, std::uint64_t seed) {
  auto all = all_pair_sets(m);
  if (sample == 0 || sample >= all.size()) return all;
  std::vector<PairSet> out;
  out.reserve(sample);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), sample, rng);
  return out;
}

namespace {
void check_even_m(int m) {
  check_m(m);
  if (m % 2 != 0) throw std::invalid_argument("m must be even");
}
}  // namespace

CheckReport check_RK_on_v(int m, std::size_t sample, std::uint64_t seed) {
  check_even_m(m);
  CheckReport rep;
  rep.label = "RK_on_v";
  rep.m = m;
  const auto sets = subsets_up_to(m, m / 2);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const F2Matrix r = replacement_R(i, j, m);
      const PairSet single(m, {{i, j}});
      for (const auto& a : sets) {
        rep.expect(r.apply(vector_from_set(a)) == predicted_RK_on_v(single, a),
                   "R(" + std::to_string(i) + "," + std::to_string(j) + ") v_" + a.to_string());
      }
    }
  }
  for (const auto& k : pair_sets_for_sweep(m, sample, seed)) {
    const F2Matrix r = replacement_R(k);
    for (const auto& a : sets) {
      rep.expect(r.apply(vector_from_set(a)) == predicted_RK_on_v(k, a), "R(K) v_A for K=" + k.to_string() + " A=" + a.to_string());
    }
  }
  return rep;
}

CheckReport check_RK_QK_equiv(int m, std::size_t sample, std::uint64_t seed) {
  check_even_m(m);
  CheckReport rep;
  rep.label = "RK_QK_equiv";
  rep.m = m;
  for (const auto& k : pair_sets_for_sweep(m, sample, seed)) {
    rep.expect(replacement_R(k) == frak_Q(k), "R(K) != frakQ(K) for K=" + k.to_string());
    rep.expect(F2Matrix::from_permutation(perm_Q(k)) == frak_R(k), "M_Q(K) != frakR(K) for K=" + k.to_string());
  }
  return rep;
}

CheckReport check_phase_from_QK(int m, std::size_t sample, std::uint64_t seed) {
  check_even_m(m);
  const int h = m / 2;
  CheckReport rep;
  rep.label = "phase_from_QK";
  rep.m = m;
  const auto small = subsets_up_to(m, h - 1);
  const auto half = subsets_of_size(m, h);
  for (const auto& k : pair_sets_for_sweep(m, sample, seed)) {
    const Permutation q = perm_Q(k);
    for (const auto& a : small) {
      const BitVector v = vector_from_set(a);
      const std::size_t w = (v & q.apply(v)).weight();
      rep.expect(w % 4 == 0, "wt not divisible by 4 for K=" + k.to_string() + " A=" + a.to_string());
    }
    for (const auto& b : half) {
      const BitVector v = vector_from_set(b);
      const std::size_t w = (v & q.apply(v)).weight();
      bool pair_inside = false;
      for (auto [i, j] : k.pairs()) pair_inside |= b.contains(i) && b.contains(j);
      const int l = (b & k.first()).size();
      bool ok;
      if (pair_inside) {
        ok = w == 0;
      } else if (l == h) {
        ok = w == 1;
      } else if (l == h - 1) {
        ok = w == 2;
      } else {
        ok = w % 4 == 0;
      }
      rep.expect(ok, "wt(v_B AND Q(K) v_B)=" + std::to_string(w) + " for K=" + k.to_string() + " B=" + b.to_string());
    }
  }
  return rep;
}

}  // namespace qrm
