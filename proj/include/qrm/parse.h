#pragma once

#include <string_view>
#include <vector>

#include "qrm/f2.h"
#include "qrm/pauli.h"

namespace qrm {

// "CZ11(1,4) CZ00(2,3) S(2)" -> 0-based logical gates. CZ and CZ11 both name
// the |11> controlled-Z. Throws std::invalid_argument on malformed input.
std::vector<Gate> parse_logical_gates(std::string_view text);

// "-X2 Z3 Z5" -> Pauli on k qubits with 1-based indices; the sign is + or -.
PhasedPauli parse_logical_pauli(std::size_t k, std::string_view text);

// "(1,2) (3,4)" -> PairSet on [m]; the empty string is the empty set.
PairSet parse_pair_set(int m, std::string_view text);

// "1,3" or "{1,3}" -> IndexSet on [m].
IndexSet parse_index_set(int m, std::string_view text);

}  // namespace qrm
