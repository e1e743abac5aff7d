#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrm/bitvec.h"

namespace qrm {

// i^phase X(x) Z(z), with the X part written first.
struct PhasedPauli {
  std::uint8_t phase = 0;  // mod 4
  BitVector x;
  BitVector z;

  PhasedPauli() = default;
  explicit PhasedPauli(std::size_t qubits) : x(qubits), z(qubits) {}
  PhasedPauli(std::uint8_t s, BitVector xs, BitVector zs);

  static PhasedPauli X(const BitVector& support) { return {0, support, BitVector(support.size())}; }
  static PhasedPauli Z(const BitVector& support) { return {0, BitVector(support.size()), support}; }
  static PhasedPauli single(std::size_t qubits, std::size_t q, char letter);

  std::size_t size() const { return x.size(); }
  bool is_identity() const { return x.none() && z.none(); }
  // i^s X(x)Z(z) is Hermitian iff s + dot(x, z) is even.
  bool is_hermitian() const { return ((phase + (x.dot(z) ? 1 : 0)) & 1u) == 0; }
  bool commutes_with(const PhasedPauli& other) const { return x.dot(other.z) == z.dot(other.x); }

  // Letters per qubit using Y for iXZ, with a leading sign; requires Hermitian.
  std::string to_string() const;

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

// (i^s1 X(x1)Z(z1)) (i^s2 X(x2)Z(z2)) = i^{s1+s2+2 dot(z1,x2)} X(x1+x2) Z(z1+z2).
PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b);

enum class GateKind : std::uint8_t { H, S, SDG, SW, CX, CZ, CZ00, X, Z };

constexpr std::array<GateKind, 9> kAllGateKinds = {GateKind::H,  GateKind::S,    GateKind::SDG,
                                                   GateKind::SW, GateKind::CX,   GateKind::CZ,
                                                   GateKind::CZ00, GateKind::X, GateKind::Z};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);
int gate_arity(GateKind kind);

struct Gate {
  GateKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // second operand; the target for CX

  static Gate one(GateKind kind, std::uint32_t q);
  static Gate two(GateKind kind, std::uint32_t q0, std::uint32_t q1);
  int arity() const { return gate_arity(kind); }
  Gate inverse() const;
  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Gates with pairwise disjoint supports.
struct GateLayer {
  std::vector<Gate> gates;

  bool empty() const { return gates.empty(); }
};

// Conjugation p -> U p U^dagger for a single gate. Two code paths exist for
// this rule: this one acts on a single Pauli, the batched one in engine.cc acts
// on many Paulis at once; tests compare them.
void conjugate_gate(PhasedPauli& p, const Gate& g);

}  // namespace qrm
