#include <gtest/gtest.h>

#include <random>

#include "qrm/engine.h"
#include "qrm/statevector.h"
#include "qrm/synth.h"
#include "test_util.h"

namespace qrm {
namespace {

constexpr double kTol = 1e-10;

TEST(Oracle, DenseGatesAgreeWithTableauRules) {
  for (GateKind kind : kAllGateKinds) {
    const Gate g = gate_arity(kind) == 1 ? Gate::one(kind, 0) : Gate::two(kind, 0, 1);
    EXPECT_TRUE(matches_tableau(unitary_of(2, {g}), tableau_of(2, {g}), kTol)) << g.to_string();
  }
}

TEST(Oracle, GlobalPhaseComparison) {
  DenseMatrix a = unitary_of(1, {Gate::one(GateKind::S, 0)});
  DenseMatrix b = a;
  for (auto& v : b.data) v *= std::polar(1.0, 0.7);
  EXPECT_TRUE(equal_up_to_global_phase(a, b, kTol));
  EXPECT_FALSE(equal_up_to_global_phase(a, unitary_of(1, {Gate::one(GateKind::SDG, 0)}), kTol));
}

TEST(Oracle, FoldLayersM2) {
  const QrmCode code(2);
  for (const Circuit& c : {fold_phase(perm_Q(1, 2, 2)), fold_swap(perm_P(1, 2, 2)), transversal(GateKind::H, 2)}) {
    const auto o = oracle_statevector(c, code);
    EXPECT_LT(o.max_leakage, kTol);
    EXPECT_TRUE(matches_tableau(o.unitary, logical_action(c, code), kTol));
  }
}

TEST(Oracle, LeakingCircuitIsReported) {
  const QrmCode code(2);
  Circuit c(2);
  c.add_layer({{Gate::one(GateKind::H, 0)}});
  EXPECT_GT(oracle_statevector(c, code).max_leakage, 0.1);
}

TEST(Oracle, EverySynthesizedGateM2) {
  Synthesizer syn(2);
  std::vector<Gate> gates;
  for (GateKind kind : kAllGateKinds) {
    if (gate_arity(kind) == 1) {
      gates.push_back(Gate::one(kind, 0));
      gates.push_back(Gate::one(kind, 1));
    } else {
      gates.push_back(Gate::two(kind, 0, 1));
      gates.push_back(Gate::two(kind, 1, 0));
    }
  }
  for (const Gate& g : gates) {
    const auto o = oracle_statevector(syn.synth_gate(g), syn.code());
    EXPECT_LT(o.max_leakage, kTol) << logical_gate_label(g);
    EXPECT_TRUE(equal_up_to_global_phase(o.unitary, unitary_of(2, {g}), kTol)) << logical_gate_label(g);
  }
}

TEST(Oracle, CompiledCliffordsM2) {
  Synthesizer syn(2);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const auto word = testing::random_gate_word(2, 12, rng);
    const auto o = oracle_statevector(syn.compile_clifford(tableau_of(2, word)), syn.code());
    EXPECT_LT(o.max_leakage, kTol);
    EXPECT_TRUE(equal_up_to_global_phase(o.unitary, unitary_of(2, word), kTol));
  }
}

TEST(Oracle, WorkedExamplesM4) {
  Synthesizer syn(4);
  const auto s = oracle_statevector(syn.synth_S(2), syn.code());
  EXPECT_EQ(s.unitary.dim, 64u);
  EXPECT_LT(s.max_leakage, kTol);
  EXPECT_TRUE(equal_up_to_global_phase(s.unitary, unitary_of(6, {Gate::one(GateKind::S, 1)}), kTol));
  const auto cz = oracle_statevector(syn.synth_CZ00_adjacent(2, 3), syn.code());
  EXPECT_LT(cz.max_leakage, kTol);
  EXPECT_TRUE(equal_up_to_global_phase(cz.unitary, unitary_of(6, {Gate::two(GateKind::CZ00, 1, 2)}), kTol));
}

TEST(Oracle, RejectsLargeM) {
  const QrmCode code(6);
  EXPECT_THROW(oracle_statevector(Circuit(6), code), std::invalid_argument);
}

}  // namespace
}  // namespace qrm
