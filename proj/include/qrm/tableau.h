#pragma once

#include <string>
#include <vector>

#include "qrm/pauli.h"

namespace qrm {

// Clifford action on k qubits stored as the images of X_i and Z_i (0-based
// qubit i). Global phase is not represented.
class Tableau {
 public:
  Tableau() = default;
  static Tableau identity(std::size_t k);
  Tableau(std::vector<PhasedPauli> x_images, std::vector<PhasedPauli> z_images);

  std::size_t qubits() const { return x_images_.size(); }
  const PhasedPauli& x_image(std::size_t i) const { return x_images_[i]; }
  const PhasedPauli& z_image(std::size_t i) const { return z_images_[i]; }

  // Image of i^s X(a)Z(b) = i^s prod T(X_i) prod T(Z_j), X factors first.
  PhasedPauli apply(const PhasedPauli& p) const;
  // This action followed by `later`.
  Tableau then(const Tableau& later) const;
  Tableau then(const Gate& g) const;
  Tableau then(const std::vector<Gate>& gates) const;
  Tableau inverse() const;

  // Images Hermitian and commutation relations preserved.
  bool is_symplectic() const;
  bool is_identity() const;
  // Z_i images are +Z_i and X_i images are X_i times Z factors.
  bool is_diagonal() const;

  std::vector<std::string> describe() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<PhasedPauli> x_images_;
  std::vector<PhasedPauli> z_images_;
};

// Logical gate on 1-based canonical positions; converts to a 0-based Gate.
Gate logical_gate(GateKind kind, int i, int j = 0);
Tableau tableau_of(std::size_t k, const std::vector<Gate>& gates);

// Reads a diagonal tableau back as a product of S/SDG, CZ, CZ00 and Z gates
// (1-based positions in the strings). Throws if the tableau is not diagonal.
std::vector<std::string> diagonal_gate_list(const Tableau& t);

}  // namespace qrm
