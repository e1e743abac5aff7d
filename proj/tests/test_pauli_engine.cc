#include <gtest/gtest.h>

#include <random>

#include "qrm/engine.h"
#include "qrm/golden_m4.h"
#include "qrm/parse.h"
#include "qrm/statevector.h"
#include "qrm/verify.h"
#include "test_util.h"

namespace qrm {
namespace {

PhasedPauli random_hermitian(std::size_t n, std::mt19937_64& rng) {
  PhasedPauli p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.x.set(q, rng() & 1u);
    p.z.set(q, rng() & 1u);
  }
  p.phase = static_cast<std::uint8_t>((p.x.dot(p.z) ? 1 : 0) + 2 * (rng() & 1u));
  return p;
}

double max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

TEST(PhasedPauli, CompositionMatchesMatrices) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    PhasedPauli a = random_hermitian(3, rng);
    PhasedPauli b = random_hermitian(3, rng);
    a.phase = static_cast<std::uint8_t>(rng() % 4);
    b.phase = static_cast<std::uint8_t>(rng() % 4);
    EXPECT_LT(max_diff(pauli_matrix(a * b), pauli_matrix(a) * pauli_matrix(b)), 1e-12);
  }
}

TEST(PhasedPauli, ToStringUsesY) {
  PhasedPauli p(3);
  p.x.set(0, true);
  p.z.set(0, true);
  p.phase = 1;
  p.z.set(2, true);
  EXPECT_EQ(p.to_string(), "+YIZ");
}

TEST(Conjugation, SingleGateMatchesDense) {
  std::mt19937_64 rng(2);
  for (GateKind kind : kAllGateKinds) {
    const Gate g = gate_arity(kind) == 1 ? Gate::one(kind, 1) : Gate::two(kind, 2, 0);
    const DenseMatrix u = unitary_of(3, {g});
    for (int t = 0; t < 40; ++t) {
      const PhasedPauli p = random_hermitian(3, rng);
      PhasedPauli img = p;
      conjugate_gate(img, g);
      EXPECT_LT(max_diff(pauli_matrix(img), u * pauli_matrix(p) * adjoint(u)), 1e-12) << g.to_string();
    }
  }
}

TEST(Conjugation, CircuitMatchesDense) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Circuit c = testing::random_circuit(2, 6, rng);
    const DenseMatrix u = unitary_of(4, testing::flatten(c));
    for (int s = 0; s < 10; ++s) {
      const PhasedPauli p = random_hermitian(4, rng);
      EXPECT_LT(max_diff(pauli_matrix(conjugate(c, p)), u * pauli_matrix(p) * adjoint(u)), 1e-12);
    }
  }
}

TEST(Conjugation, BatchedMatchesSingle) {
  std::mt19937_64 rng(4);
  for (int m : {3, 6, 7}) {
    const std::size_t n = std::size_t{1} << m;
    for (int t = 0; t < 5; ++t) {
      const Circuit c = testing::random_circuit(m, 12, rng);
      std::vector<PhasedPauli> ps;
      for (int s = 0; s < 150; ++s) ps.push_back(random_hermitian(n, rng));
      const auto batch = conjugate_all(c, ps);
      ASSERT_EQ(batch.size(), ps.size());
      for (std::size_t s = 0; s < ps.size(); ++s) ASSERT_EQ(batch[s], conjugate(c, ps[s])) << "m=" << m << " pauli " << s;
    }
  }
}

TEST(Conjugation, InverseUndoes) {
  std::mt19937_64 rng(5);
  const Circuit c = testing::random_circuit(4, 10, rng);
  Circuit both = c;
  both.append(c.inverse());
  for (int s = 0; s < 50; ++s) {
    const PhasedPauli p = random_hermitian(16, rng);
    EXPECT_EQ(conjugate(both, p), p);
  }
}

TEST(Preservation, FoldLayers) {
  for (int m : {2, 4, 6}) {
    EXPECT_TRUE(verify_thm2(m).passed());
    EXPECT_TRUE(verify_thm3(m).passed());
  }
}

TEST(Preservation, DeletedGateGivesWitness) {
  const QrmCode code(4);
  const Circuit good = fold_phase(Permutation::identity(4));
  GateLayer layer = good.layers().front();
  ASSERT_EQ(layer.gates.size(), 16u);
  layer.gates.erase(layer.gates.begin());
  Circuit bad(4);
  bad.add_layer(layer);
  const auto res = preserves_stabilizers(bad, code);
  ASSERT_FALSE(res.ok);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_FALSE(res.witness->reason.empty());
  EXPECT_THROW(logical_action(bad, code), std::invalid_argument);
}

TEST(LogicalAction, EmptyCircuitIsIdentity) {
  const QrmCode code(4);
  EXPECT_TRUE(logical_action(Circuit(4), code).is_identity());
}

TEST(LogicalAction, PhaseLayerOfIdentity) {
  const QrmCode code(4);
  const Tableau t = logical_action(fold_phase(Permutation::identity(4)), code);
  EXPECT_EQ(t, tableau_of(6, parse_logical_gates("CZ11(1,4) CZ11(2,5) CZ11(3,6)")));
  EXPECT_EQ(diagonal_gate_list(t), (std::vector<std::string>{"CZ11(1,4)", "CZ11(2,5)", "CZ11(3,6)"}));
}

TEST(LogicalAction, LayerIdentitiesM4) {
  const QrmCode code(4);
  EXPECT_EQ(logical_action(fold_swap(perm_P(1, 2, 4)), code), tableau_of(6, parse_logical_gates("SW(2,6) SW(3,5)")));
  EXPECT_EQ(logical_action(fold_phase(perm_P(1, 2, 4)), code),
            tableau_of(6, parse_logical_gates("CZ11(1,4) CZ00(2,3) CZ00(5,6)")));
  EXPECT_EQ(logical_action(fold_swap(perm_Q(1, 2, 4)), code), tableau_of(6, parse_logical_gates("CX(2,6) CX(3,5)")));
}

TEST(LogicalAction, LayerImageTablesM4) {
  const QrmCode code(4);
  for (const auto& row : golden_m4::kLayerImages) {
    const std::string layer(row.layer);
    const Permutation pi = layer[3] == 'P' ? perm_P(1, 2, 4) : perm_Q(1, 2, 4);
    const Tableau t = logical_action(layer[1] == 'S' ? fold_swap(pi) : fold_phase(pi), code);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_EQ(t.x_image(i), parse_logical_pauli(6, row.images[2 * i])) << layer << " X" << i + 1;
      EXPECT_EQ(t.z_image(i), parse_logical_pauli(6, row.images[2 * i + 1])) << layer << " Z" << i + 1;
    }
  }
}

TEST(LogicalAction, ComposesAsGroupAction) {
  const QrmCode code(6);
  std::mt19937_64 rng(6);
  const auto sets = all_pair_sets(6);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (int t = 0; t < 30; ++t) {
    Circuit a = fold_phase(perm_Q(sets[pick(rng)]));
    a.append(transversal(GateKind::H, 6));
    const Circuit b = fold_swap(perm_P(1 + static_cast<int>(rng() % 3), 4 + static_cast<int>(rng() % 3), 6));
    Circuit ab = a;
    ab.append(b);
    const Tableau ta = logical_action(a, code);
    const Tableau tb = logical_action(b, code);
    EXPECT_EQ(logical_action(ab, code), ta.then(tb));
    EXPECT_EQ(logical_action(a.inverse(), code), ta.inverse());
    EXPECT_TRUE(ta.is_symplectic());
  }
}

TEST(LogicalAction, ReduceModuloStabilizers) {
  const QrmCode code(4);
  const PhasedPauli x = PhasedPauli::X(code.logical_x(2) ^ code.stabilizer_supports()[1]);
  const auto r = reduce_to_logical(x, code);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, parse_logical_pauli(6, "X2"));
  PhasedPauli single(16);
  single.x.set(0, true);
  EXPECT_FALSE(reduce_to_logical(single, code).has_value());
}

TEST(Tableau, GateRulesAndDescribe) {
  const Tableau t = tableau_of(2, {Gate::one(GateKind::H, 0), Gate::two(GateKind::CX, 0, 1)});
  EXPECT_TRUE(t.is_symplectic());
  EXPECT_EQ(t.describe().front(), "X1 -> +Z1");
  EXPECT_EQ(t.then(t.inverse()), Tableau::identity(2));
  std::mt19937_64 rng(8);
  for (int s = 0; s < 50; ++s) {
    const auto w1 = testing::random_gate_word(3, 10, rng);
    const auto w2 = testing::random_gate_word(3, 10, rng);
    auto both = w1;
    both.insert(both.end(), w2.begin(), w2.end());
    EXPECT_EQ(tableau_of(3, both), tableau_of(3, w1).then(tableau_of(3, w2)));
    EXPECT_TRUE(matches_tableau(unitary_of(3, both), tableau_of(3, both), 1e-10));
  }
}

TEST(Tableau, Cz00IsCz11WithZs) {
  EXPECT_EQ(tableau_of(2, parse_logical_gates("CZ00(1,2)")), tableau_of(2, parse_logical_gates("CZ11(1,2) Z(1) Z(2)")));
  EXPECT_EQ(tableau_of(1, parse_logical_gates("S(1) S(1)")), tableau_of(1, parse_logical_gates("Z(1)")));
}

}  // namespace
}  // namespace qrm
