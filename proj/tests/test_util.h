#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qrm/circuit.h"
#include "qrm/pauli.h"

namespace qrm::testing {

// Uniform gate word over every kind on k qubits; two-qubit kinds need k >= 2.
inline std::vector<Gate> random_gate_word(std::size_t k, std::size_t length, std::mt19937_64& rng) {
  std::vector<Gate> out;
  std::uniform_int_distribution<std::size_t> pick_kind(0, kAllGateKinds.size() - 1);
  std::uniform_int_distribution<std::uint32_t> pick_q(0, static_cast<std::uint32_t>(k - 1));
  while (out.size() < length) {
    const GateKind kind = kAllGateKinds[pick_kind(rng)];
    if (gate_arity(kind) == 1) {
      out.push_back(Gate::one(kind, pick_q(rng)));
    } else if (k >= 2) {
      const std::uint32_t a = pick_q(rng);
      std::uint32_t b = pick_q(rng);
      while (b == a) b = pick_q(rng);
      out.push_back(Gate::two(kind, a, b));
    }
  }
  return out;
}

// Layers of random disjoint gates on 2^m qubits.
inline Circuit random_circuit(int m, std::size_t layers, std::mt19937_64& rng) {
  Circuit c(m);
  std::uniform_int_distribution<std::size_t> pick_kind(0, kAllGateKinds.size() - 1);
  std::bernoulli_distribution skip(0.25);
  for (std::size_t t = 0; t < layers; ++t) {
    std::vector<std::uint32_t> qs(c.qubits());
    std::iota(qs.begin(), qs.end(), 0u);
    std::shuffle(qs.begin(), qs.end(), rng);
    GateLayer layer;
    std::size_t i = 0;
    while (i < qs.size()) {
      const GateKind kind = kAllGateKinds[pick_kind(rng)];
      if (skip(rng)) {
        ++i;
      } else if (gate_arity(kind) == 1) {
        layer.gates.push_back(Gate::one(kind, qs[i++]));
      } else if (i + 1 < qs.size()) {
        layer.gates.push_back(Gate::two(kind, qs[i], qs[i + 1]));
        i += 2;
      } else {
        ++i;
      }
    }
    c.add_layer(std::move(layer));
  }
  return c;
}

inline std::vector<Gate> flatten(const Circuit& c) {
  std::vector<Gate> out;
  for (const auto& layer : c.layers()) out.insert(out.end(), layer.gates.begin(), layer.gates.end());
  return out;
}

}  // namespace qrm::testing
