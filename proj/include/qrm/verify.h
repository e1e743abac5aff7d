#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrm/report.h"

namespace qrm {

struct VerifyOptions {
  std::size_t sample = 0;  // pair sets per sweep; 0 visits every K
  std::uint64_t seed = 1;
};

// Labels accepted by verify_theorem, in the order the CLI lists them.
const std::vector<std::string>& theorem_labels();

// Runs one sweep at one m and fills in the wall-clock time. tables-m4 ignores m.
// Throws std::invalid_argument for an unknown label or invalid m.
CheckReport verify_theorem(const std::string& label, int m, const VerifyOptions& opts = {});

// Weight and dot-product identities of the v_A vectors, plus nesting and
// duality of RM(r, m).
CheckReport verify_prop1(int m);
// M_pi v_A is the AND of M_pi v_a for P, Q, Q(K) and seeded random pi; P and
// Q are automorphisms of every RM(r, m).
CheckReport verify_prop2(int m, const VerifyOptions& opts = {});
CheckReport verify_lemmas(int m, const VerifyOptions& opts = {});
// Weight-reduced generators: weight 2^{m/2+1} each and the same row space.
CheckReport verify_thm1(int m);
// U_S and U_P of every P(i, j) and Q(i, j) preserve the stabilizer group.
CheckReport verify_thm2(int m);
// U_P(Q(K)) preserves the stabilizer group.
CheckReport verify_thm3(int m, const VerifyOptions& opts = {});
// Logical action of U_P(Q(K)) against the closed-form gate list.
CheckReport verify_thm4(int m, const VerifyOptions& opts = {});
// Logical action of the product over L in K against the closed form.
CheckReport verify_thm5(int m, const VerifyOptions& opts = {});
// Addressable S, S^dagger and adjacent CZ00: actions, depths and the parity rule.
CheckReport verify_cor5(int m);
// Transversal H action and addressable H on every logical qubit.
CheckReport verify_thm6(int m);
// Addressable SW and CZ00 on every pair of logical qubits.
CheckReport verify_thm7(int m);
// m = 4 reference tables, worked examples and layer identities.
CheckReport verify_tables_m4();

}  // namespace qrm
