#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrm/f2.h"
#include "qrm/pauli.h"

namespace qrm {

// Time-ordered layers on n = 2^m physical qubits. Depth is the layer count,
// empty layers included.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int m);

  int m() const { return m_; }
  std::size_t qubits() const { return std::size_t{1} << m_; }
  std::size_t depth() const { return layers_.size(); }
  const std::vector<GateLayer>& layers() const { return layers_; }

  // Validates operand range and disjointness within the layer.
  void add_layer(GateLayer layer);
  void append(const Circuit& later);
  Circuit inverse() const;
  std::size_t gate_count() const;

  nlohmann::json& meta() { return meta_; }
  const nlohmann::json& meta() const { return meta_; }

 private:
  int m_ = 0;
  std::vector<GateLayer> layers_;
  nlohmann::json meta_ = nlohmann::json::object();
};

// Swap-type layer U_S(pi): SW on every pair p < pi(p).
Circuit fold_swap(const Permutation& pi);
// Phase-type layer U_P(pi): CZ on every pair p < pi(p), S on every fixed point.
Circuit fold_phase(const Permutation& pi);
// One layer of `kind` on every qubit.
Circuit transversal(GateKind kind, int m);

// Classification of a layer by content: "fold_phase", "fold_swap",
// "transversal_H", "pauli", "empty" or "other".
std::string layer_kind(const GateLayer& layer, std::size_t qubits);

struct DepthReport {
  std::size_t depth = 0;
  std::map<std::string, std::size_t> kind_counts;
  std::string asymptotic = "other";
};

DepthReport depth_report(const Circuit& c, const std::string& asymptotic);

}  // namespace qrm
