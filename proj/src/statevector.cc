#include "qrm/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qrm {

namespace {
constexpr std::size_t kMaxDenseQubits = 20;
const cplx kI(0.0, 1.0);
}  // namespace

StateVector::StateVector(std::size_t qubits) : qubits_(qubits) {
  if (qubits > kMaxDenseQubits) throw std::invalid_argument("dense state vector limited to 20 qubits");
  amps_.assign(std::size_t{1} << qubits, cplx(0.0));
}

StateVector StateVector::basis(std::size_t qubits, std::size_t index) {
  StateVector s(qubits);
  s.amps_.at(index) = 1.0;
  return s;
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  const std::size_t ma = std::size_t{1} << g.a;
  const std::size_t mb = g.arity() == 2 ? std::size_t{1} << g.b : 0;
  if (g.a >= qubits_ || (g.arity() == 2 && g.b >= qubits_)) throw std::out_of_range("gate outside state");
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    switch (g.kind) {
      case GateKind::H:
        if (!(idx & ma)) {
          const cplx a0 = amps_[idx], a1 = amps_[idx | ma];
          amps_[idx] = r * (a0 + a1);
          amps_[idx | ma] = r * (a0 - a1);
        }
        break;
      case GateKind::S:
        if (idx & ma) amps_[idx] *= kI;
        break;
      case GateKind::SDG:
        if (idx & ma) amps_[idx] *= -kI;
        break;
      case GateKind::X:
        if (!(idx & ma)) std::swap(amps_[idx], amps_[idx | ma]);
        break;
      case GateKind::Z:
        if (idx & ma) amps_[idx] = -amps_[idx];
        break;
      case GateKind::SW:
        if ((idx & ma) && !(idx & mb)) std::swap(amps_[idx], amps_[(idx & ~ma) | mb]);
        break;
      case GateKind::CX:
        if ((idx & ma) && !(idx & mb)) std::swap(amps_[idx], amps_[idx | mb]);
        break;
      case GateKind::CZ:
        if ((idx & ma) && (idx & mb)) amps_[idx] = -amps_[idx];
        break;
      case GateKind::CZ00:
        if (!(idx & ma) && !(idx & mb)) amps_[idx] = -amps_[idx];
        break;
    }
  }
}

void StateVector::apply(const std::vector<Gate>& gates) {
  for (const auto& g : gates) apply(g);
}

void StateVector::apply(const Circuit& c) {
  if (c.qubits() != qubits_) throw std::invalid_argument("circuit width does not match state");
  for (const auto& layer : c.layers()) apply(layer.gates);
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix size mismatch");
  DenseMatrix out(a.dim);
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t t = 0; t < a.dim; ++t) {
      const cplx art = a.at(r, t);
      if (art == cplx(0.0)) continue;
      for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += art * b.at(t, c);
    }
  }
  return out;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix out(a.dim);
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) out.at(c, r) = std::conj(a.at(r, c));
  }
  return out;
}

DenseMatrix pauli_matrix(const PhasedPauli& p) {
  const std::size_t k = p.size();
  const std::size_t dim = std::size_t{1} << k;
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q : p.x.positions()) xmask |= std::size_t{1} << q;
  for (std::size_t q : p.z.positions()) zmask |= std::size_t{1} << q;
  const cplx phase = std::pow(kI, static_cast<int>(p.phase));
  DenseMatrix out(dim);
  // X(x)Z(z)|j> = (-1)^{z.j} |j ^ x>
  for (std::size_t j = 0; j < dim; ++j) {
    const double sign = (std::popcount(zmask & j) & 1) ? -1.0 : 1.0;
    out.at(j ^ xmask, j) = phase * sign;
  }
  return out;
}

DenseMatrix unitary_of(std::size_t qubits, const std::vector<Gate>& gates) {
  const std::size_t dim = std::size_t{1} << qubits;
  DenseMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s = StateVector::basis(qubits, j);
    s.apply(gates);
    for (std::size_t r = 0; r < dim; ++r) u.at(r, j) = s.amplitudes()[r];
  }
  return u;
}

OracleResult oracle_statevector(const Circuit& c, const QrmCode& code) {
  if (code.m() > 4) throw std::invalid_argument("state-vector oracle is capped at m = 4");
  if (c.m() != code.m()) throw std::invalid_argument("circuit and code have different m");
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  auto mask_of = [](const BitVector& v) {
    std::size_t mask = 0;
    for (std::size_t q : v.positions()) mask |= std::size_t{1} << q;
    return mask;
  };

  // |0_L> from projecting |0...0> onto the +1 eigenspace of each X stabilizer.
  StateVector zero = StateVector::basis(n, 0);
  for (const auto& v : code.stabilizer_supports()) {
    const std::size_t xm = mask_of(v);
    auto& a = zero.amplitudes();
    std::vector<cplx> next(a.size());
    for (std::size_t idx = 0; idx < a.size(); ++idx) next[idx] = 0.5 * (a[idx] + a[idx ^ xm]);
    a.swap(next);
  }
  double norm = 0.0;
  for (const auto& amp : zero.amplitudes()) norm += std::norm(amp);
  for (auto& amp : zero.amplitudes()) amp /= std::sqrt(norm);

  // Sparse encoded basis |j_L> = X(a_j)|0_L>.
  std::vector<std::pair<std::size_t, cplx>> support;
  for (std::size_t idx = 0; idx < zero.amplitudes().size(); ++idx) {
    if (std::abs(zero.amplitudes()[idx]) > 1e-12) support.emplace_back(idx, zero.amplitudes()[idx]);
  }
  const std::size_t dim = std::size_t{1} << k;
  std::vector<std::size_t> shift(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((j >> i) & 1u) shift[j] ^= mask_of(code.logical_x(static_cast<int>(i + 1)));
    }
  }

  OracleResult out{DenseMatrix(dim), 0.0};
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector s(n);
    for (const auto& [idx, amp] : support) s.amplitudes()[idx ^ shift[j]] = amp;
    s.apply(c);
    double kept = 0.0;
    for (std::size_t jp = 0; jp < dim; ++jp) {
      cplx overlap = 0.0;
      for (const auto& [idx, amp] : support) overlap += std::conj(amp) * s.amplitudes()[idx ^ shift[jp]];
      out.unitary.at(jp, j) = overlap;
      kept += std::norm(overlap);
    }
    out.max_leakage = std::max(out.max_leakage, std::abs(1.0 - kept));
  }
  return out;
}

bool equal_up_to_global_phase(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.dim != b.dim) return false;
  // Fix the phase from the largest entry of b.
  std::size_t best = 0;
  for (std::size_t t = 0; t < b.data.size(); ++t) {
    if (std::abs(b.data[t]) > std::abs(b.data[best])) best = t;
  }
  if (std::abs(b.data[best]) < tol) return false;
  const cplx ratio = a.data[best] / b.data[best];
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  for (std::size_t t = 0; t < a.data.size(); ++t) {
    if (std::abs(a.data[t] - ratio * b.data[t]) > tol) return false;
  }
  return true;
}

bool matches_tableau(const DenseMatrix& u, const Tableau& t, double tol) {
  const std::size_t k = t.qubits();
  if (u.dim != (std::size_t{1} << k)) return false;
  const DenseMatrix udag = adjoint(u);
  for (std::size_t i = 0; i < k; ++i) {
    for (char letter : {'X', 'Z'}) {
      const PhasedPauli p = PhasedPauli::single(k, i, letter);
      const DenseMatrix lhs = u * pauli_matrix(p) * udag;
      const DenseMatrix rhs = pauli_matrix(t.apply(p));
      for (std::size_t e = 0; e < lhs.data.size(); ++e) {
        if (std::abs(lhs.data[e] - rhs.data[e]) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace qrm
