#include "qrm/pauli.h"

#include <stdexcept>
#include <utility>

namespace qrm {

PhasedPauli::PhasedPauli(std::uint8_t s, BitVector xs, BitVector zs)
    : phase(static_cast<std::uint8_t>(s & 3u)), x(std::move(xs)), z(std::move(zs)) {
  if (x.size() != z.size()) throw std::invalid_argument("X and Z supports differ in length");
}

PhasedPauli PhasedPauli::single(std::size_t qubits, std::size_t q, char letter) {
  PhasedPauli p(qubits);
  switch (letter) {
    case 'X':
      p.x.set(q);
      break;
    case 'Z':
      p.z.set(q);
      break;
    case 'Y':
      p.x.set(q);
      p.z.set(q);
      p.phase = 1;
      break;
    case 'I':
      break;
    default:
      throw std::invalid_argument("unknown Pauli letter");
  }
  return p;
}

std::string PhasedPauli::to_string() const {
  // Each Y contributes -i relative to iXZ bookkeeping: XZ = -iY.
  int s = phase;
  std::string letters(size(), 'I');
  for (std::size_t q = 0; q < size(); ++q) {
    const bool xq = x.get(q);
    const bool zq = z.get(q);
    if (xq && zq) {
      letters[q] = 'Y';
      s += 3;
    } else if (xq) {
      letters[q] = 'X';
    } else if (zq) {
      letters[q] = 'Z';
    }
  }
  s &= 3;
  const char* sign = s == 0 ? "+" : s == 1 ? "+i" : s == 2 ? "-" : "-i";
  return sign + letters;
}

PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b) {
  const int s = a.phase + b.phase + (a.z.dot(b.x) ? 2 : 0);
  return {static_cast<std::uint8_t>(s & 3), a.x ^ b.x, a.z ^ b.z};
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::SDG:
      return "SDG";
    case GateKind::SW:
      return "SW";
    case GateKind::CX:
      return "CX";
    case GateKind::CZ:
      return "CZ";
    case GateKind::CZ00:
      return "CZ00";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  for (auto kind : kAllGateKinds) {
    if (gate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::SW:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CZ00:
      return 2;
    default:
      return 1;
  }
}

Gate Gate::one(GateKind kind, std::uint32_t q) {
  if (gate_arity(kind) != 1) throw std::invalid_argument("gate needs two operands");
  return {kind, q, 0};
}

Gate Gate::two(GateKind kind, std::uint32_t q0, std::uint32_t q1) {
  if (gate_arity(kind) != 2) throw std::invalid_argument("gate takes one operand");
  if (q0 == q1) throw std::invalid_argument("two-qubit gate operands must differ");
  return {kind, q0, q1};
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind == GateKind::S) g.kind = GateKind::SDG;
  if (kind == GateKind::SDG) g.kind = GateKind::S;
  return g;
}

std::string Gate::to_string() const {
  std::string s(gate_name(kind));
  s += "(" + std::to_string(a);
  if (arity() == 2) s += "," + std::to_string(b);
  return s + ")";
}

namespace {
void add_phase(PhasedPauli& p, int s) { p.phase = static_cast<std::uint8_t>((p.phase + s) & 3); }
}  // namespace

void conjugate_gate(PhasedPauli& p, const Gate& g) {
  const std::size_t a = g.a;
  const std::size_t b = g.b;
  if (a >= p.size() || (g.arity() == 2 && b >= p.size())) throw std::out_of_range("gate operand outside Pauli");
  switch (g.kind) {
    case GateKind::H: {
      const bool xa = p.x.get(a);
      const bool za = p.z.get(a);
      if (xa && za) add_phase(p, 2);
      p.x.set(a, za);
      p.z.set(a, xa);
      break;
    }
    case GateKind::S:
      if (p.x.get(a)) {
        add_phase(p, 1);
        p.z.flip(a);
      }
      break;
    case GateKind::SDG:
      if (p.x.get(a)) {
        add_phase(p, 3);
        p.z.flip(a);
      }
      break;
    case GateKind::X:
      if (p.z.get(a)) add_phase(p, 2);
      break;
    case GateKind::Z:
      if (p.x.get(a)) add_phase(p, 2);
      break;
    case GateKind::SW: {
      const bool xa = p.x.get(a), za = p.z.get(a);
      p.x.set(a, p.x.get(b));
      p.z.set(a, p.z.get(b));
      p.x.set(b, xa);
      p.z.set(b, za);
      break;
    }
    case GateKind::CX:
      if (p.x.get(a)) p.x.flip(b);
      if (p.z.get(b)) p.z.flip(a);
      break;
    case GateKind::CZ:
    case GateKind::CZ00: {
      const bool xa = p.x.get(a), xb = p.x.get(b);
      if (xa && xb) add_phase(p, 2);
      if (g.kind == GateKind::CZ00 && (xa != xb)) add_phase(p, 2);
      if (xb) p.z.flip(a);
      if (xa) p.z.flip(b);
      break;
    }
  }
}

}  // namespace qrm
