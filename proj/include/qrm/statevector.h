#pragma once

#include <complex>
#include <vector>

#include "qrm/circuit.h"
#include "qrm/qrm_code.h"
#include "qrm/tableau.h"

namespace qrm {

using cplx = std::complex<double>;

// Dense state on up to 20 qubits; qubit q is bit q of the basis index.
class StateVector {
 public:
  explicit StateVector(std::size_t qubits);
  static StateVector basis(std::size_t qubits, std::size_t index);

  std::size_t qubits() const { return qubits_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  void apply(const Gate& g);
  void apply(const std::vector<Gate>& gates);
  void apply(const Circuit& c);

 private:
  std::size_t qubits_;
  std::vector<cplx> amps_;
};

// Row-major dim x dim complex matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<cplx> data;

  explicit DenseMatrix(std::size_t d = 0) : dim(d), data(d * d) {}
  cplx& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  cplx at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
DenseMatrix pauli_matrix(const PhasedPauli& p);
// Unitary of a gate list on `qubits` qubits, built column by column.
DenseMatrix unitary_of(std::size_t qubits, const std::vector<Gate>& gates);

struct OracleResult {
  DenseMatrix unitary;      // <j'_L| U |j_L> over the 2^k encoded basis states
  double max_leakage = 0.0;  // worst 1 - sum_j' |U_L[j', j]|^2
};

// Brute-force logical action of a physical circuit; m <= 4 only.
OracleResult oracle_statevector(const Circuit& c, const QrmCode& code);

bool equal_up_to_global_phase(const DenseMatrix& a, const DenseMatrix& b, double tol);
// U P U^dagger equals the tableau image for every X_i and Z_i.
bool matches_tableau(const DenseMatrix& u, const Tableau& t, double tol);

}  // namespace qrm
