#include <gtest/gtest.h>

#include <random>

#include "qrm/engine.h"
#include "qrm/json_io.h"
#include "qrm/parse.h"
#include "qrm/synth.h"
#include "test_util.h"

namespace qrm {
namespace {

TEST(CircuitJson, ExactShape) {
  Circuit c(2);
  c.add_layer({{Gate::two(GateKind::CZ, 0, 3), Gate::one(GateKind::S, 1)}});
  c.meta()["gate"] = "S(1)";
  const json j = circuit_to_json(c);
  EXPECT_EQ(j.dump(), R"j({"layers":[{"gates":[{"g":"CZ","q":[0,3]},{"g":"S","q":[1]}]}],"m":2,"meta":{"gate":"S(1)"}})j");
}

TEST(CircuitJson, RoundTripPreservesAction) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const Circuit c = testing::random_circuit(4, 5, rng);
    const Circuit back = circuit_from_json(json::parse(circuit_to_json(c).dump()));
    EXPECT_EQ(circuit_to_json(back), circuit_to_json(c));
  }
  Synthesizer syn(4);
  const Circuit s = syn.synth_SW(1, 4);
  const Circuit back = circuit_from_json(circuit_to_json(s));
  EXPECT_EQ(logical_action(back, syn.code()), tableau_of(6, parse_logical_gates("SW(1,4)")));
}

TEST(CircuitJson, RejectsMalformed) {
  const char* bad[] = {
      R"([])",
      R"({"layers": []})",
      R"({"m": 2})",
      R"({"m": 2, "layers": [{"gates": [{"g": "T", "q": [0]}]}]})",
      R"({"m": 2, "layers": [{"gates": [{"g": "CZ", "q": [0]}]}]})",
      R"({"m": 2, "layers": [{"gates": [{"g": "H", "q": [4]}]}]})",
      R"({"m": 2, "layers": [{"gates": [{"g": "H", "q": [-1]}]}]})",
      R"({"m": 2, "layers": [{"gates": [{"g": "H", "q": [0]}, {"g": "S", "q": [0]}]}]})",
      R"({"m": 2, "layers": [{"gates": [{"g": "CX", "q": [1, 1]}]}]})",
      R"({"m": 2, "layers": [], "meta": 3})",
  };
  for (const char* text : bad) EXPECT_THROW(circuit_from_json(json::parse(text)), JsonFormatError) << text;
}

TEST(CodeJson, Fields) {
  const json j = code_to_json(QrmCode(4));
  EXPECT_EQ(j["n"], 16);
  EXPECT_EQ(j["k"], 6);
  EXPECT_EQ(j["d"], 4);
  EXPECT_EQ(j["stabilizers"]["x"].size(), 5u);
  EXPECT_EQ(j["logicals"][1]["set"], json({1, 3}));
  EXPECT_EQ(j["logicals"][0]["x_support"], json({3, 7, 11, 15}));
  const json r = code_to_json(QrmCode(4), true, IndexSet(4, {4}));
  EXPECT_EQ(r["stabilizers"]["x"][0]["support"], json({0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Parse, GatesPaulisSets) {
  const auto gates = parse_logical_gates("CZ11(1,4) CZ00(2,3) S(2)");
  ASSERT_EQ(gates.size(), 3u);
  EXPECT_EQ(gates[0], Gate::two(GateKind::CZ, 0, 3));
  EXPECT_EQ(gates[2], Gate::one(GateKind::S, 1));
  EXPECT_THROW(parse_logical_gates("S(0)"), std::invalid_argument);
  EXPECT_THROW(parse_logical_gates("Q(1)"), std::invalid_argument);
  const PhasedPauli p = parse_logical_pauli(6, "-X2 Z3 Z5");
  EXPECT_EQ(p.to_string(), "-IXZIZI");
  EXPECT_EQ(parse_pair_set(4, "(1,2) (3,4)"), PairSet(4, {{1, 2}, {3, 4}}));
  EXPECT_TRUE(parse_pair_set(4, "").empty());
  EXPECT_EQ(parse_index_set(4, "{1,3}"), parse_index_set(4, "1,3"));
}

}  // namespace
}  // namespace qrm
