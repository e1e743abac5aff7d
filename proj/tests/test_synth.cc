#include <gtest/gtest.h>

#include <random>

#include "qrm/closed_form.h"
#include "qrm/engine.h"
#include "qrm/golden_m4.h"
#include "qrm/parse.h"
#include "qrm/synth.h"
#include "qrm/verify.h"
#include "test_util.h"

namespace qrm {
namespace {

void expect_pass(const CheckReport& r) {
  EXPECT_TRUE(r.passed()) << r.label << " m=" << r.m << ": " << (r.failures.empty() ? "no checks" : r.failures.front());
}

Circuit product_over_subsets(const PairSet& k) {
  Circuit c(k.m());
  for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) c.append(fold_phase(perm_Q(k.subset(mask))));
  return c;
}

TEST(ClosedForm, PhaseLayerMatchesEngineExhaustive) {
  for (int m : {2, 4, 6}) expect_pass(verify_thm4(m));
}

TEST(ClosedForm, ProductMatchesEngineExhaustive) {
  for (int m : {2, 4, 6}) expect_pass(verify_thm5(m));
}

TEST(ClosedForm, ExampleTablesM4) {
  const QrmCode code(4);
  for (const auto& row : golden_m4::kFoldPhase) {
    const PairSet k = parse_pair_set(4, row.pairs);
    const Tableau want = tableau_of(6, parse_logical_gates(row.gates));
    EXPECT_EQ(tableau_of(6, predicted_fold_phase_gates(code, k)), want) << row.pairs;
    EXPECT_EQ(logical_action(fold_phase(perm_Q(k)), code), want) << row.pairs;
  }
  for (const auto& row : golden_m4::kFoldProduct) {
    const PairSet k = parse_pair_set(4, row.pairs);
    const Tableau want = tableau_of(6, parse_logical_gates(row.gates));
    EXPECT_EQ(tableau_of(6, predicted_fold_product_gates(code, k)), want) << row.pairs;
    EXPECT_EQ(logical_action(product_over_subsets(k), code), want) << row.pairs;
  }
}

TEST(ClosedForm, TransversalH) {
  for (int m : {2, 4, 6}) expect_pass(verify_thm6(m));
}

TEST(Synth, PairSetsAndChains) {
  EXPECT_EQ(s_pair_set(IndexSet(4, {1, 3})), PairSet(4, {{1, 2}, {3, 4}}));
  const PairSet k = cz00_pair_set(IndexSet(4, {1, 3}), IndexSet(4, {1, 4}));
  EXPECT_EQ(k.first(), IndexSet(4, {1}));
  EXPECT_EQ(k.second(), IndexSet(4, {2}));
  const auto chain = adjacent_chain(IndexSet(6, {1, 2, 3}), IndexSet(6, {4, 5, 6}));
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(chain[1], IndexSet(6, {2, 3, 4}));
  EXPECT_EQ(chain[2], IndexSet(6, {3, 4, 5}));
}

TEST(Synth, HWordIsShortAndBalanced) {
  const auto& word = h_word();
  EXPECT_EQ(word.size(), 5u);
  EXPECT_EQ(std::count(word.begin(), word.end(), HLetter::HN) % 2, 0);
}

TEST(Synth, WorkedExamplesM4) {
  Synthesizer syn(4);
  const Circuit s = syn.synth_S(2);
  EXPECT_EQ(s.depth(), 4u);
  EXPECT_EQ(s.meta()["gate"], "S(2)");
  const Circuit cz = syn.synth_CZ00_adjacent(2, 3);
  EXPECT_EQ(cz.depth(), 2u);
  EXPECT_EQ(cz.meta()["gate"], "CZ00(2,3)");
  EXPECT_EQ(logical_action(s, syn.code()), tableau_of(6, parse_logical_gates("S(2)")));
}

TEST(Synth, DepthEqualities) {
  for (int m : {2, 4, 6, 8}) expect_pass(verify_cor5(m));
}

TEST(Synth, HDepths) {
  EXPECT_EQ(Synthesizer(2).synth_H(1).depth(), 8u);
  EXPECT_EQ(Synthesizer(4).synth_H(3).depth(), 14u);
  EXPECT_EQ(Synthesizer(6).synth_H(7).depth(), 26u);
}

TEST(Synth, AddressableGatesAllOperands) {
  for (int m : {2, 4, 6}) {
    Synthesizer syn(m);
    const int k = static_cast<int>(syn.code().k());
    for (int b = 1; b <= k; ++b) {
      for (GateKind kind : {GateKind::S, GateKind::SDG, GateKind::H, GateKind::X, GateKind::Z}) {
        const Gate g = logical_gate(kind, b);
        EXPECT_EQ(logical_action(syn.synth_gate(g), syn.code()), tableau_of(syn.code().k(), {g})) << logical_gate_label(g);
      }
    }
  }
  for (int m : {2, 4, 6}) expect_pass(verify_thm7(m));
}

TEST(Synth, DerivedTwoQubitGates) {
  Synthesizer syn(4);
  for (GateKind kind : {GateKind::CZ, GateKind::CX, GateKind::CZ00, GateKind::SW}) {
    for (auto [b, b2] : {std::pair{1, 4}, std::pair{6, 2}, std::pair{3, 5}}) {
      const Gate g = logical_gate(kind, b, b2);
      EXPECT_EQ(logical_action(syn.synth_gate(g), syn.code()), tableau_of(6, {g})) << logical_gate_label(g);
    }
  }
}

TEST(Synth, RejectsBadOperands) {
  Synthesizer syn(4);
  EXPECT_THROW(syn.synth_S(0), std::invalid_argument);
  EXPECT_THROW(syn.synth_S(7), std::invalid_argument);
  EXPECT_THROW(syn.synth_SW(2, 2), std::invalid_argument);
  EXPECT_THROW(syn.synth_CZ00_adjacent(1, 4), std::invalid_argument);
}

TEST(Synth, AsymptoticLabels) {
  Synthesizer syn(6);
  EXPECT_EQ(syn.asymptotic_label(logical_gate(GateKind::H, 1)), "sqrt(n)");
  // {1,2,3} and {1,2,4} are adjacent; {1,2,3} and its complement are not.
  const int adj = syn.position(IndexSet(6, {1, 2, 4}));
  const int far = syn.position(IndexSet(6, {4, 5, 6}));
  EXPECT_EQ(syn.asymptotic_label(logical_gate(GateKind::SW, 1, adj)), "sqrt(n)");
  EXPECT_EQ(syn.asymptotic_label(logical_gate(GateKind::SW, 1, far)), "sqrt(n)·log(n)");
}

TEST(Synth, CompileCliffordRoundTrip) {
  std::mt19937_64 rng(21);
  for (int m : {2, 4}) {
    Synthesizer syn(m);
    const std::size_t k = syn.code().k();
    for (int t = 0; t < (m == 2 ? 30 : 4); ++t) {
      const Tableau target = tableau_of(k, testing::random_gate_word(k, 4 * k, rng));
      const auto word = syn.clifford_word(target);
      EXPECT_EQ(tableau_of(k, word), target);
      EXPECT_EQ(logical_action(syn.compile_clifford(target), syn.code()), target);
    }
  }
}

TEST(Synth, CompileIdentityIsEmptyWord) {
  Synthesizer syn(4);
  EXPECT_TRUE(syn.clifford_word(Tableau::identity(6)).empty());
}

}  // namespace
}  // namespace qrm
