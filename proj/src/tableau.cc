#include "qrm/tableau.h"

#include <stdexcept>

#include "qrm/f2.h"

namespace qrm {

Tableau Tableau::identity(std::size_t k) {
  std::vector<PhasedPauli> xs, zs;
  for (std::size_t i = 0; i < k; ++i) {
    xs.push_back(PhasedPauli::single(k, i, 'X'));
    zs.push_back(PhasedPauli::single(k, i, 'Z'));
  }
  return Tableau(std::move(xs), std::move(zs));
}

Tableau::Tableau(std::vector<PhasedPauli> x_images, std::vector<PhasedPauli> z_images)
    : x_images_(std::move(x_images)), z_images_(std::move(z_images)) {
  if (x_images_.size() != z_images_.size()) throw std::invalid_argument("tableau needs one X and one Z image per qubit");
  for (std::size_t i = 0; i < x_images_.size(); ++i) {
    if (x_images_[i].size() != qubits() || z_images_[i].size() != qubits()) {
      throw std::invalid_argument("tableau image length must equal the qubit count");
    }
  }
}

PhasedPauli Tableau::apply(const PhasedPauli& p) const {
  if (p.size() != qubits()) throw std::invalid_argument("Pauli length does not match tableau");
  PhasedPauli out(qubits());
  out.phase = p.phase;
  for (std::size_t i : p.x.positions()) out = out * x_images_[i];
  for (std::size_t j : p.z.positions()) out = out * z_images_[j];
  return out;
}

Tableau Tableau::then(const Tableau& later) const {
  if (later.qubits() != qubits()) throw std::invalid_argument("tableau size mismatch");
  std::vector<PhasedPauli> xs, zs;
  for (std::size_t i = 0; i < qubits(); ++i) {
    xs.push_back(later.apply(x_images_[i]));
    zs.push_back(later.apply(z_images_[i]));
  }
  return Tableau(std::move(xs), std::move(zs));
}

Tableau Tableau::then(const Gate& g) const {
  Tableau out = *this;
  for (auto& p : out.x_images_) conjugate_gate(p, g);
  for (auto& p : out.z_images_) conjugate_gate(p, g);
  return out;
}

Tableau Tableau::then(const std::vector<Gate>& gates) const {
  Tableau out = *this;
  for (const auto& g : gates) {
    for (auto& p : out.x_images_) conjugate_gate(p, g);
    for (auto& p : out.z_images_) conjugate_gate(p, g);
  }
  return out;
}

Tableau Tableau::inverse() const {
  if (!is_symplectic()) throw std::invalid_argument("cannot invert a non-symplectic tableau");
  const std::size_t k = qubits();
  std::vector<BitVector> rows;
  auto binary = [k](const PhasedPauli& p) {
    BitVector v(2 * k);
    for (std::size_t q : p.x.positions()) v.set(q);
    for (std::size_t q : p.z.positions()) v.set(k + q);
    return v;
  };
  for (const auto& p : x_images_) rows.push_back(binary(p));
  for (const auto& p : z_images_) rows.push_back(binary(p));
  const RowSpace space(2 * k, rows);
  auto preimage = [&](const PhasedPauli& target) {
    const auto c = space.decompose(binary(target));
    if (!c) throw std::logic_error("tableau images do not span the Pauli group");
    PhasedPauli q(k);
    for (std::size_t r : c->positions()) {
      if (r < k) {
        q.x.set(r);
      } else {
        q.z.set(r - k);
      }
    }
    q.phase = q.x.dot(q.z) ? 1 : 0;
    const PhasedPauli img = apply(q);
    q.phase = static_cast<std::uint8_t>((q.phase + target.phase + 4 - img.phase) & 3);
    return q;
  };
  std::vector<PhasedPauli> xs, zs;
  for (std::size_t i = 0; i < k; ++i) {
    xs.push_back(preimage(PhasedPauli::single(k, i, 'X')));
    zs.push_back(preimage(PhasedPauli::single(k, i, 'Z')));
  }
  return Tableau(std::move(xs), std::move(zs));
}

bool Tableau::is_symplectic() const {
  const std::size_t k = qubits();
  for (std::size_t i = 0; i < k; ++i) {
    if (!x_images_[i].is_hermitian() || !z_images_[i].is_hermitian()) return false;
    if (x_images_[i].is_identity() || z_images_[i].is_identity()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (!x_images_[i].commutes_with(x_images_[j])) return false;
      if (!z_images_[i].commutes_with(z_images_[j])) return false;
      if (x_images_[i].commutes_with(z_images_[j]) != (i != j)) return false;
    }
  }
  return true;
}

bool Tableau::is_identity() const { return *this == identity(qubits()); }

bool Tableau::is_diagonal() const {
  const std::size_t k = qubits();
  for (std::size_t i = 0; i < k; ++i) {
    if (!(z_images_[i] == PhasedPauli::single(k, i, 'Z'))) return false;
    BitVector e(k);
    e.set(i);
    if (!(x_images_[i].x == e)) return false;
  }
  return true;
}

namespace {
std::string sparse(const PhasedPauli& p) {
  int s = p.phase;
  std::string body;
  for (std::size_t q = 0; q < p.size(); ++q) {
    const bool xq = p.x.get(q), zq = p.z.get(q);
    if (!xq && !zq) continue;
    char letter = xq && zq ? 'Y' : xq ? 'X' : 'Z';
    if (xq && zq) s += 3;
    if (!body.empty()) body += " ";
    body += letter + std::to_string(q + 1);
  }
  s &= 3;
  const char* sign = s == 0 ? "+" : s == 1 ? "+i" : s == 2 ? "-" : "-i";
  return std::string(sign) + (body.empty() ? "I" : body);
}
}  // namespace

std::vector<std::string> Tableau::describe() const {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < qubits(); ++i) {
    lines.push_back("X" + std::to_string(i + 1) + " -> " + sparse(x_images_[i]));
    lines.push_back("Z" + std::to_string(i + 1) + " -> " + sparse(z_images_[i]));
  }
  return lines;
}

Gate logical_gate(GateKind kind, int i, int j) {
  if (i < 1 || (gate_arity(kind) == 2 && j < 1)) throw std::invalid_argument("logical positions are 1-based");
  if (gate_arity(kind) == 1) return Gate::one(kind, static_cast<std::uint32_t>(i - 1));
  return Gate::two(kind, static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1));
}

Tableau tableau_of(std::size_t k, const std::vector<Gate>& gates) { return Tableau::identity(k).then(gates); }

std::vector<std::string> diagonal_gate_list(const Tableau& t) {
  if (!t.is_diagonal()) throw std::invalid_argument("tableau is not diagonal");
  const std::size_t k = t.qubits();
  std::vector<bool> residual_z(k, false);
  std::vector<std::string> single;
  for (std::size_t i = 0; i < k; ++i) {
    const PhasedPauli& img = t.x_image(i);
    const std::string pos = std::to_string(i + 1);
    if (img.z.get(i)) {
      if (img.phase == 1) {
        single.push_back("S(" + pos + ")");
      } else if (img.phase == 3) {
        single.push_back("SDG(" + pos + ")");
      } else {
        throw std::logic_error("non-Hermitian diagonal image");
      }
    } else {
      residual_z[i] = img.phase == 2;
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (t.x_image(i).z.get(j) != t.x_image(j).z.get(i)) throw std::logic_error("asymmetric diagonal tableau");
      if (!t.x_image(i).z.get(j)) continue;
      const std::string args = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (residual_z[i] && residual_z[j]) {
        out.push_back("CZ00" + args);
        residual_z[i] = residual_z[j] = false;
      } else {
        out.push_back("CZ11" + args);
      }
    }
  }
  out.insert(out.end(), single.begin(), single.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (residual_z[i]) out.push_back("Z(" + std::to_string(i + 1) + ")");
  }
  return out;
}

}  // namespace qrm
