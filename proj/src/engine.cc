#include "qrm/engine.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qrm {

PhasedPauli conjugate(const Circuit& c, const PhasedPauli& p) {
  if (p.size() != c.qubits()) throw std::invalid_argument("Pauli length does not match circuit");
  PhasedPauli out = p;
  for (const auto& layer : c.layers()) {
    for (const auto& g : layer.gates) conjugate_gate(out, g);
  }
  return out;
}

namespace {

// Per-qubit bit planes over a batch of Paulis; the phase exponent is split
// into two planes (bit 0 and bit 1).
class PauliBatch {
 public:
  PauliBatch(std::size_t qubits, const std::vector<PhasedPauli>& ps)
      : n_(qubits), count_(ps.size()), w_((ps.size() + 63) / 64), x_(n_ * w_, 0), z_(n_ * w_, 0), r0_(w_, 0), r1_(w_, 0) {
    for (std::size_t j = 0; j < count_; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (j & 63);
      const std::size_t word = j >> 6;
      for (std::size_t q : ps[j].x.positions()) x_[q * w_ + word] |= bit;
      for (std::size_t q : ps[j].z.positions()) z_[q * w_ + word] |= bit;
      if (ps[j].phase & 1u) r0_[word] |= bit;
      if (ps[j].phase & 2u) r1_[word] |= bit;
    }
  }

  std::vector<PhasedPauli> unpack() const {
    std::vector<PhasedPauli> out(count_, PhasedPauli(n_));
    for (std::size_t q = 0; q < n_; ++q) {
      for (std::size_t w = 0; w < w_; ++w) {
        for (std::uint64_t bits = x_[q * w_ + w]; bits; bits &= bits - 1) out[w * 64 + std::countr_zero(bits)].x.set(q);
        for (std::uint64_t bits = z_[q * w_ + w]; bits; bits &= bits - 1) out[w * 64 + std::countr_zero(bits)].z.set(q);
      }
    }
    for (std::size_t j = 0; j < count_; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (j & 63);
      const std::size_t word = j >> 6;
      out[j].phase = static_cast<std::uint8_t>(((r0_[word] & bit) ? 1 : 0) | ((r1_[word] & bit) ? 2 : 0));
    }
    return out;
  }

  void apply(const Gate& g) {
    std::uint64_t* xa = &x_[g.a * w_];
    std::uint64_t* za = &z_[g.a * w_];
    std::uint64_t* xb = g.arity() == 2 ? &x_[g.b * w_] : nullptr;
    std::uint64_t* zb = g.arity() == 2 ? &z_[g.b * w_] : nullptr;
    for (std::size_t w = 0; w < w_; ++w) {
      std::uint64_t& r0 = r0_[w];
      std::uint64_t& r1 = r1_[w];
      switch (g.kind) {
        case GateKind::H:
          r1 ^= xa[w] & za[w];
          std::swap(xa[w], za[w]);
          break;
        case GateKind::S:
          r1 ^= r0 & xa[w];
          r0 ^= xa[w];
          za[w] ^= xa[w];
          break;
        case GateKind::SDG:
          r1 ^= xa[w];
          r1 ^= r0 & xa[w];
          r0 ^= xa[w];
          za[w] ^= xa[w];
          break;
        case GateKind::X:
          r1 ^= za[w];
          break;
        case GateKind::Z:
          r1 ^= xa[w];
          break;
        case GateKind::SW:
          std::swap(xa[w], xb[w]);
          std::swap(za[w], zb[w]);
          break;
        case GateKind::CX:
          xb[w] ^= xa[w];
          za[w] ^= zb[w];
          break;
        case GateKind::CZ:
          r1 ^= xa[w] & xb[w];
          za[w] ^= xb[w];
          zb[w] ^= xa[w];
          break;
        case GateKind::CZ00:
          r1 ^= xa[w] | xb[w];
          za[w] ^= xb[w];
          zb[w] ^= xa[w];
          break;
      }
    }
  }

 private:
  std::size_t n_;
  std::size_t count_;
  std::size_t w_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint64_t> r0_;
  std::vector<std::uint64_t> r1_;
};

}  // namespace

std::vector<PhasedPauli> conjugate_all(const Circuit& c, const std::vector<PhasedPauli>& ps) {
  for (const auto& p : ps) {
    if (p.size() != c.qubits()) throw std::invalid_argument("Pauli length does not match circuit");
  }
  PauliBatch batch(c.qubits(), ps);
  for (const auto& layer : c.layers()) {
    for (const auto& g : layer.gates) batch.apply(g);
  }
  return batch.unpack();
}

std::optional<PhasedPauli> reduce_to_logical(const PhasedPauli& image, const QrmCode& code) {
  const std::size_t s = code.stabilizer_labels().size();
  const std::size_t k = code.k();
  const auto cx = code.x_reduction_space().decompose(image.x);
  const auto cz = code.z_reduction_space().decompose(image.z);
  if (!cx || !cz) return std::nullopt;
  // The stabilizer part of x is orthogonal to every v_{B^c}, so dropping both
  // stabilizer parts leaves the phase unchanged.
  PhasedPauli out(k);
  out.phase = image.phase;
  for (std::size_t i = 0; i < k; ++i) {
    out.x.set(i, cx->get(s + i));
    out.z.set(i, cz->get(s + i));
  }
  return out;
}

CircuitAnalysis analyze(const Circuit& c, const QrmCode& code) {
  if (c.m() != code.m()) throw std::invalid_argument("circuit and code have different m");
  const auto& labels = code.stabilizer_labels();
  const auto& supports = code.stabilizer_supports();
  const std::size_t k = code.k();
  std::vector<PhasedPauli> inputs;
  inputs.reserve(2 * supports.size() + 2 * k);
  for (const auto& v : supports) {
    inputs.push_back(PhasedPauli::X(v));
    inputs.push_back(PhasedPauli::Z(v));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    inputs.push_back(PhasedPauli::X(code.logical_x(static_cast<int>(i))));
    inputs.push_back(PhasedPauli::Z(code.logical_z(static_cast<int>(i))));
  }
  const auto images = conjugate_all(c, inputs);

  CircuitAnalysis out;
  const RowSpace& stab = code.stabilizer_space();
  for (std::size_t t = 0; t < 2 * supports.size(); ++t) {
    const PhasedPauli& img = images[t];
    std::string reason;
    if (!stab.contains(img.x)) {
      reason = "X part outside the stabilizer span";
    } else if (!stab.contains(img.z)) {
      reason = "Z part outside the stabilizer span";
    } else if (img.phase != 0) {
      reason = "phase exponent " + std::to_string(img.phase) + " after reduction";
    }
    if (!reason.empty()) {
      out.preservation.ok = false;
      out.preservation.witness = PreservationWitness{labels[t / 2], t % 2 == 0 ? 'X' : 'Z', img, reason};
      return out;
    }
  }

  std::vector<PhasedPauli> xs, zs;
  for (std::size_t i = 0; i < k; ++i) {
    auto rx = reduce_to_logical(images[2 * supports.size() + 2 * i], code);
    auto rz = reduce_to_logical(images[2 * supports.size() + 2 * i + 1], code);
    if (!rx || !rz) throw std::logic_error("logical image left the normalizer although stabilizers were preserved");
    xs.push_back(std::move(*rx));
    zs.push_back(std::move(*rz));
  }
  out.action = LogicalTableau(std::move(xs), std::move(zs));
  return out;
}

PreservationResult preserves_stabilizers(const Circuit& c, const QrmCode& code) { return analyze(c, code).preservation; }

LogicalTableau logical_action(const Circuit& c, const QrmCode& code) {
  auto a = analyze(c, code);
  if (!a.preservation.ok) {
    const auto& w = *a.preservation.witness;
    throw std::invalid_argument(std::string("circuit does not preserve the stabilizer group: g_") + (w.type == 'X' ? "x" : "z") + "(" +
                                w.label.to_string() + "): " + w.reason);
  }
  return std::move(*a.action);
}

}  // namespace qrm
