#include "qrm/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace qrm {

Circuit::Circuit(int m) : m_(m) { check_m(m); }

void Circuit::add_layer(GateLayer layer) {
  std::vector<bool> used(qubits(), false);
  auto claim = [&](std::uint32_t q) {
    if (q >= qubits()) throw std::invalid_argument("gate position " + std::to_string(q) + " outside circuit");
    if (used[q]) throw std::invalid_argument("gates in a layer must have disjoint supports");
    used[q] = true;
  };
  for (const auto& g : layer.gates) {
    claim(g.a);
    if (g.arity() == 2) claim(g.b);
  }
  layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit& later) {
  if (later.m_ != m_) throw std::invalid_argument("cannot append circuits on different m");
  layers_.insert(layers_.end(), later.layers_.begin(), later.layers_.end());
}

Circuit Circuit::inverse() const {
  Circuit out(m_);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    GateLayer inv;
    for (const auto& g : it->gates) inv.gates.push_back(g.inverse());
    out.layers_.push_back(std::move(inv));
  }
  out.meta_ = meta_;
  return out;
}

std::size_t Circuit::gate_count() const {
  std::size_t total = 0;
  for (const auto& l : layers_) total += l.gates.size();
  return total;
}

namespace {
void require_involution(const Permutation& pi) {
  if (!pi.is_involution()) throw std::invalid_argument("fold-transversal layers need an involutive permutation");
}
}  // namespace

Circuit fold_swap(const Permutation& pi) {
  require_involution(pi);
  Circuit c(pi.m());
  GateLayer layer;
  for (std::uint32_t p = 0; p < pi.size(); ++p) {
    if (p < pi(p)) layer.gates.push_back(Gate::two(GateKind::SW, p, pi(p)));
  }
  c.add_layer(std::move(layer));
  return c;
}

Circuit fold_phase(const Permutation& pi) {
  require_involution(pi);
  Circuit c(pi.m());
  GateLayer layer;
  for (std::uint32_t p = 0; p < pi.size(); ++p) {
    if (p < pi(p)) {
      layer.gates.push_back(Gate::two(GateKind::CZ, p, pi(p)));
    } else if (p == pi(p)) {
      layer.gates.push_back(Gate::one(GateKind::S, p));
    }
  }
  c.add_layer(std::move(layer));
  return c;
}

Circuit transversal(GateKind kind, int m) {
  if (gate_arity(kind) != 1) throw std::invalid_argument("transversal layers use single-qubit gates");
  Circuit c(m);
  GateLayer layer;
  for (std::uint32_t q = 0; q < c.qubits(); ++q) layer.gates.push_back(Gate::one(kind, q));
  c.add_layer(std::move(layer));
  return c;
}

std::string layer_kind(const GateLayer& layer, std::size_t qubits) {
  if (layer.empty()) return "empty";
  auto only = [&](std::initializer_list<GateKind> kinds) {
    return std::all_of(layer.gates.begin(), layer.gates.end(), [&](const Gate& g) {
      return std::find(kinds.begin(), kinds.end(), g.kind) != kinds.end();
    });
  };
  if (only({GateKind::H}) && layer.gates.size() == qubits) return "transversal_H";
  if (only({GateKind::CZ, GateKind::S}) || only({GateKind::CZ, GateKind::SDG})) return "fold_phase";
  if (only({GateKind::SW})) return "fold_swap";
  if (only({GateKind::X, GateKind::Z})) return "pauli";
  return "other";
}

DepthReport depth_report(const Circuit& c, const std::string& asymptotic) {
  DepthReport r;
  r.depth = c.depth();
  r.asymptotic = asymptotic;
  for (const auto& l : c.layers()) ++r.kind_counts[layer_kind(l, c.qubits())];
  return r;
}

}  // namespace qrm
