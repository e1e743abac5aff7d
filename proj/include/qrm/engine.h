#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrm/circuit.h"
#include "qrm/pauli.h"
#include "qrm/qrm_code.h"
#include "qrm/tableau.h"

namespace qrm {

using LogicalTableau = Tableau;

// U p U^dagger for the whole circuit (layers in time order).
PhasedPauli conjugate(const Circuit& c, const PhasedPauli& p);
// Same map applied to many Paulis at once with word-parallel bit planes.
std::vector<PhasedPauli> conjugate_all(const Circuit& c, const std::vector<PhasedPauli>& ps);

struct PreservationWitness {
  IndexSet label;
  char type = 'X';  // generator g_x(A) or g_z(A)
  PhasedPauli image;
  std::string reason;
};

struct PreservationResult {
  bool ok = true;
  std::optional<PreservationWitness> witness;
  explicit operator bool() const { return ok; }
};

// Every stabilizer generator must map to X(x)Z(z) with x, z in RM(m/2-1, m)
// and phase exponent 0.
PreservationResult preserves_stabilizers(const Circuit& c, const QrmCode& code);

// Images of the canonical logical X and Z reduced modulo stabilizers.
// Throws std::invalid_argument if the circuit does not preserve the stabilizer group.
LogicalTableau logical_action(const Circuit& c, const QrmCode& code);

// Both results from a single batched conjugation pass.
struct CircuitAnalysis {
  PreservationResult preservation;
  std::optional<LogicalTableau> action;
};
CircuitAnalysis analyze(const Circuit& c, const QrmCode& code);

// Reduces a physical logical-operator image to k-qubit form; nullopt if it
// lies outside the normalizer span.
std::optional<PhasedPauli> reduce_to_logical(const PhasedPauli& image, const QrmCode& code);

}  // namespace qrm
