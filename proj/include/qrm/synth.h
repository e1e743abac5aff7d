#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qrm/circuit.h"
#include "qrm/f2.h"
#include "qrm/qrm_code.h"
#include "qrm/tableau.h"

namespace qrm {

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letters of the abstract two-qubit model used to search for H(B): qubit 0 is
// B, qubit 1 is B^c, and HN is H on every physical qubit.
enum class HLetter : std::uint8_t { HN, S_B, SDG_B, S_BC, SDG_BC };
std::string_view h_letter_name(HLetter l);
// Shortest word (time order) over the letters whose action is H on B with an
// even number of HN letters; found by breadth-first search and cached.
const std::vector<HLetter>& h_word();

// Positionally paired K = {(b_1, c_1), ...} with b sorted over B and c over B^c.
PairSet s_pair_set(const IndexSet& b);
// K with F1 = B n B' and F2 = [m] \ (B u B'), both sorted.
PairSet cz00_pair_set(const IndexSet& b, const IndexSet& b2);
// Deterministic chain B = B_0, ..., B_c = B' of adjacent index sets: each step
// replaces the smallest element of B_j \ B' by the smallest of B' \ B_j.
std::vector<IndexSet> adjacent_chain(const IndexSet& b, const IndexSet& b2);

// Builds verified logical gates for one code. Logical operands are 1-based
// canonical positions. Every returned circuit has been checked to preserve the
// stabilizer group and to act as the requested gate on the operands and as
// the identity elsewhere; a failed check throws SynthesisError.
// Not thread-safe because of the internal cache; use one instance per thread.
class Synthesizer {
 public:
  explicit Synthesizer(int m);
  explicit Synthesizer(const QrmCode& code);

  const QrmCode& code() const { return code_; }
  int m() const { return code_.m(); }
  int position(const IndexSet& b) const { return code_.lookup(b).position; }

  Circuit synth_S(int b, bool dagger = false);
  Circuit synth_CZ00_adjacent(int b, int b2);
  Circuit synth_H(int b);
  Circuit synth_SW(int b, int b2);
  Circuit synth_CZ00(int b, int b2);
  // kind is CZ (meaning C11Z), CX (control b, target b2), Z or X.
  Circuit synth_derived(GateKind kind, int b, int b2 = 0);
  // Dispatches a 0-based logical gate to the matching construction.
  Circuit synth_gate(const Gate& g);

  // Letters (0-based logical gates over H, S, SDG, CZ, SW, X, Z) whose
  // composition in time order is `target`.
  std::vector<Gate> clifford_word(const Tableau& target) const;
  Circuit compile_clifford(const Tableau& target);

  // "sqrt(n)", "sqrt(n)·log(n)" or "other" for a 0-based logical gate.
  std::string asymptotic_label(const Gate& g) const;

 private:
  Circuit verified(Circuit c, const Tableau& target, const std::string& label) const;
  Circuit verified_gate(Circuit c, const Gate& g) const;
  Gate gate(GateKind kind, int b, int b2 = 0) const;
  void check_position(int b) const;
  void check_pair(int b, int b2) const;

  QrmCode code_;
  std::map<std::tuple<GateKind, std::uint32_t, std::uint32_t>, Circuit> cache_;
};

// Human-readable 1-based name such as "S(2)" or "CZ00(2,3)".
std::string logical_gate_label(const Gate& g);

}  // namespace qrm
