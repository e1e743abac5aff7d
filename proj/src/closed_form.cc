#include "qrm/closed_form.h"

#include <set>
#include <utility>

namespace qrm {

namespace {

using PairKey = std::pair<int, int>;

// Unordered pairs {B, B'} with F1(L) in B, F2(L) disjoint from B and
// B' = (B^c u F1(L)) \ F2(L), as 0-based logical positions.
std::set<PairKey> pairs_for(const QrmCode& code, const PairSet& l) {
  const IndexSet f1 = l.first();
  const IndexSet f2 = l.second();
  std::set<PairKey> out;
  for (const auto& li : code.logical_indices()) {
    const IndexSet& b = li.set;
    if (!f1.is_subset_of(b) || !(f2 & b).empty()) continue;
    const IndexSet b2 = (b.complement() | f1) - f2;
    const int p = li.position - 1;
    const int q = code.lookup(b2).position - 1;
    out.insert({std::min(p, q), std::max(p, q)});
  }
  return out;
}

void toggle(std::set<PairKey>& acc, const std::set<PairKey>& pairs) {
  for (const auto& pq : pairs) {
    if (!acc.erase(pq)) acc.insert(pq);
  }
}

void emit(std::vector<Gate>& out, GateKind kind, const std::set<PairKey>& pairs) {
  for (auto [p, q] : pairs) {
    // A pair with B' = B would be a single-qubit term; the clauses never produce it.
    if (p != q) out.push_back(Gate::two(kind, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)));
  }
}

void emit_s(std::vector<Gate>& out, const QrmCode& code, const PairSet& k) {
  const int h = code.m() / 2;
  const auto pos = static_cast<std::uint32_t>(code.lookup(k.first()).position - 1);
  out.push_back(Gate::one(h % 2 == 0 ? GateKind::S : GateKind::SDG, pos));
}

}  // namespace

std::vector<Gate> predicted_fold_phase_gates(const QrmCode& code, const PairSet& k) {
  const int h = code.m() / 2;
  std::set<PairKey> c11, c00;
  for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) {
    const PairSet l = k.subset(mask);
    const int size = static_cast<int>(l.size());
    if (size <= h - 2) {
      toggle(c11, pairs_for(code, l));
    } else if (size == h - 1) {
      toggle(c00, pairs_for(code, l));
    }
  }
  std::vector<Gate> out;
  emit(out, GateKind::CZ, c11);
  emit(out, GateKind::CZ00, c00);
  if (static_cast<int>(k.size()) == h) emit_s(out, code, k);
  return out;
}

std::vector<Gate> predicted_fold_product_gates(const QrmCode& code, const PairSet& k) {
  const int h = code.m() / 2;
  const int size = static_cast<int>(k.size());
  std::vector<Gate> out;
  if (size <= h - 2) {
    emit(out, GateKind::CZ, pairs_for(code, k));
  } else if (size == h - 1) {
    emit(out, GateKind::CZ00, pairs_for(code, k));
  } else {
    emit_s(out, code, k);
  }
  return out;
}

std::vector<Gate> predicted_transversal_h_gates(const QrmCode& code) {
  const auto k = static_cast<std::uint32_t>(code.k());
  std::vector<Gate> out;
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(Gate::one(GateKind::H, i));
  for (std::uint32_t i = 0; i < k / 2; ++i) out.push_back(Gate::two(GateKind::SW, i, i + k / 2));
  return out;
}

}  // namespace qrm
