#pragma once

#include <vector>

#include "qrm/f2.h"
#include "qrm/pauli.h"
#include "qrm/qrm_code.h"
#include "qrm/tableau.h"

namespace qrm {

// Logical gates (0-based logical positions) predicted for U_P(Q(K)) from the
// subset conditions on F1(L) and F2(L) over all L in K. Repeated pairs cancel.
std::vector<Gate> predicted_fold_phase_gates(const QrmCode& code, const PairSet& k);

// Logical gates predicted for the product of U_P(Q(L)) over all L in K,
// which only involves the L = K clause.
std::vector<Gate> predicted_fold_product_gates(const QrmCode& code, const PairSet& k);

// Logical action of H on every physical qubit: H on every logical qubit
// followed by SW(i, i + k/2).
std::vector<Gate> predicted_transversal_h_gates(const QrmCode& code);

}  // namespace qrm
