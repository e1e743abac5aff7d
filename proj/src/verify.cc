#include "qrm/verify.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>

#include "qrm/closed_form.h"
#include "qrm/engine.h"
#include "qrm/golden_m4.h"
#include "qrm/parallel.h"
#include "qrm/parse.h"
#include "qrm/qrm_code.h"
#include "qrm/rm_code.h"
#include "qrm/statevector.h"
#include "qrm/synth.h"

namespace qrm {

namespace {

void check_even(int m) {
  check_m(m);
  if (m % 2 != 0) throw std::invalid_argument("m must be even");
}

CheckReport start(const std::string& label, int m) {
  CheckReport rep;
  rep.label = label;
  rep.m = m;
  return rep;
}

// Runs fn on each index in parallel and merges the per-index reports in order.
template <typename Fn>
void sweep(CheckReport& rep, std::size_t count, Fn fn) {
  std::vector<CheckReport> parts(count);
  parallel_for(count, [&](std::size_t i) { fn(i, parts[i]); });
  for (const auto& p : parts) rep.merge(p);
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<std::pair<int, int>> ordered_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string describe_difference(const Tableau& got, const Tableau& want) {
  const auto a = got.describe();
  const auto b = want.describe();
  for (std::size_t t = 0; t < a.size() && t < b.size(); ++t) {
    if (a[t] != b[t]) return "got " + a[t] + ", expected " + b[t];
  }
  return "tableaux differ";
}

void expect_action(CheckReport& rep, const Circuit& c, const QrmCode& code, const Tableau& want, const std::string& what) {
  const auto a = analyze(c, code);
  if (!a.preservation.ok) {
    rep.expect(false, what + ": stabilizer group not preserved (" + a.preservation.witness->reason + ")");
    return;
  }
  rep.expect(*a.action == want, what + ": " + (*a.action == want ? std::string() : describe_difference(*a.action, want)));
}

}  // namespace

const std::vector<std::string>& theorem_labels() {
  static const std::vector<std::string> labels = {"prop1", "prop2", "lemmas", "thm1", "thm2", "thm3",
                                                  "thm4",  "thm5",  "cor5",   "thm6", "thm7", "tables-m4"};
  return labels;
}

CheckReport verify_theorem(const std::string& label, int m, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  if (label == "prop1") {
    rep = verify_prop1(m);
  } else if (label == "prop2") {
    rep = verify_prop2(m, opts);
  } else if (label == "lemmas") {
    rep = verify_lemmas(m, opts);
  } else if (label == "thm1") {
    rep = verify_thm1(m);
  } else if (label == "thm2") {
    rep = verify_thm2(m);
  } else if (label == "thm3") {
    rep = verify_thm3(m, opts);
  } else if (label == "thm4") {
    rep = verify_thm4(m, opts);
  } else if (label == "thm5") {
    rep = verify_thm5(m, opts);
  } else if (label == "cor5") {
    rep = verify_cor5(m);
  } else if (label == "thm6") {
    rep = verify_thm6(m);
  } else if (label == "thm7") {
    rep = verify_thm7(m);
  } else if (label == "tables-m4") {
    rep = verify_tables_m4();
  } else {
    throw std::invalid_argument("unknown theorem label '" + label + "'");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opts.sample > 0 && label != "prop1" && label != "thm1" && label != "thm2" && label != "cor5" && label != "thm6" &&
      label != "thm7" && label != "tables-m4") {
    rep.note = "sampled " + std::to_string(opts.sample) + " pair sets, seed " + std::to_string(opts.seed);
  }
  return rep;
}

CheckReport verify_prop1(int m) {
  check_m(m);
  CheckReport rep = start("prop1", m);
  const std::size_t n = std::size_t{1} << m;
  const std::uint32_t full = (1u << m) - 1;
  std::vector<BitVector> v(1u << m);
  for (std::uint32_t a = 0; a <= full; ++a) v[a] = vector_from_set(IndexSet::from_mask(m, a));
  std::vector<BitVector> not_v(m + 1);
  for (int i = 1; i <= m; ++i) not_v[i] = basis_vector(i, m).complement();

  for (std::uint32_t a = 0; a <= full; ++a) {
    // B ranges over subsets of the complement of A.
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = rest;; b = (b - 1) & rest) {
      BitVector w = v[a];
      for (int i = 1; i <= m; ++i) {
        if ((b >> (i - 1)) & 1u) w &= not_v[i];
      }
      const std::size_t want = n >> (std::popcount(a) + std::popcount(b));
      rep.expect(w.weight() == want, "weight for A=" + IndexSet::from_mask(m, a).to_string() + " B=" + IndexSet::from_mask(m, b).to_string());
      if (b == 0) break;
    }
    for (std::uint32_t b = 0; b <= full; ++b) {
      const bool d = v[a].dot(v[b]);
      rep.expect(d == (v[a | b].weight() % 2 == 1) && d == ((a | b) == full),
                 "dot for A=" + IndexSet::from_mask(m, a).to_string() + " B=" + IndexSet::from_mask(m, b).to_string());
    }
  }

  for (int r = 0; r <= m; ++r) {
    const RMCode code(r, m);
    std::size_t dim = 0;
    for (int i = 0; i <= r; ++i) dim += binomial(m, i);
    rep.expect(code.dimension() == dim && code.space().rank() == dim, "dimension of RM(" + std::to_string(r) + "," + std::to_string(m) + ")");
    if (r > 0) {
      const RMCode lower(r - 1, m);
      bool nested = true;
      for (const auto& g : lower.generators()) nested = nested && code.contains(g);
      bool strict = false;
      for (const auto& g : code.generators()) strict = strict || !lower.contains(g);
      rep.expect(nested && strict, "RM(" + std::to_string(r - 1) + "," + std::to_string(m) + ") strictly inside RM(" + std::to_string(r) + ")");
    }
    if (m - r - 1 >= 0) {
      const RMCode dual(m - r - 1, m);
      bool orthogonal = true;
      for (const auto& g : code.generators()) {
        for (const auto& h : dual.generators()) orthogonal = orthogonal && !g.dot(h);
      }
      rep.expect(orthogonal, "RM(" + std::to_string(r) + "," + std::to_string(m) + ") orthogonal to RM(" + std::to_string(m - r - 1) + ")");
    }
  }
  return rep;
}

CheckReport verify_prop2(int m, const VerifyOptions& opts) {
  check_even(m);
  CheckReport rep = start("prop2", m);
  std::vector<std::pair<std::string, Permutation>> perms;
  for (auto [i, j] : ordered_pairs(m)) {
    perms.emplace_back("P" + pair_name(i, j), perm_P(i, j, m));
    perms.emplace_back("Q" + pair_name(i, j), perm_Q(i, j, m));
  }
  for (const auto& k : pair_sets_for_sweep(m, opts.sample, opts.seed)) perms.emplace_back("Q(K=" + k.to_string() + ")", perm_Q(k));
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < 8; ++t) {
    std::vector<std::uint32_t> map(std::size_t{1} << m);
    for (std::uint32_t p = 0; p < map.size(); ++p) map[p] = p;
    std::shuffle(map.begin(), map.end(), rng);
    perms.emplace_back("random #" + std::to_string(t), Permutation(std::move(map)));
  }

  const std::uint32_t full = (1u << m) - 1;
  sweep(rep, perms.size(), [&](std::size_t t, CheckReport& part) {
    const auto& [name, pi] = perms[t];
    std::vector<BitVector> moved(m + 1);
    for (int i = 1; i <= m; ++i) moved[i] = pi.apply(basis_vector(i, m));
    for (std::uint32_t a = 0; a <= full; ++a) {
      const IndexSet set = IndexSet::from_mask(m, a);
      BitVector w = BitVector::ones(std::size_t{1} << m);
      for (int i : set.members()) w &= moved[i];
      part.expect(pi.apply(vector_from_set(set)) == w, name + " on v_" + set.to_string());
    }
  });

  std::vector<RMCode> codes;
  for (int r = 0; r <= m; ++r) codes.emplace_back(r, m);
  sweep(rep, ordered_pairs(m).size(), [&](std::size_t t, CheckReport& part) {
    const auto [i, j] = ordered_pairs(m)[t];
    const Permutation p = perm_P(i, j, m);
    const Permutation q = perm_Q(i, j, m);
    part.expect(p.is_involution() && q.is_involution(), "P/Q" + pair_name(i, j) + " involutive");
    for (const auto& code : codes) {
      part.expect(is_automorphism(p, code) && is_automorphism(q, code),
                  "P/Q" + pair_name(i, j) + " automorphism of RM(" + std::to_string(code.r()) + "," + std::to_string(m) + ")");
    }
  });
  return rep;
}

CheckReport verify_lemmas(int m, const VerifyOptions& opts) {
  CheckReport rep = start("lemmas", m);
  rep.merge(check_RK_on_v(m, opts.sample, opts.seed));
  rep.merge(check_RK_QK_equiv(m, opts.sample, opts.seed));
  rep.merge(check_phase_from_QK(m, opts.sample, opts.seed));
  return rep;
}

CheckReport verify_thm1(int m) {
  check_even(m);
  CheckReport rep = start("thm1", m);
  const QrmCode code(m);
  const auto reduced = weight_reduced_stabilizers(code);
  const std::size_t want = std::size_t{1} << (m / 2 + 1);
  std::vector<BitVector> rows;
  for (const auto& g : reduced) {
    rep.expect(g.support.weight() == want, "weight of h_" + g.label.to_string());
    rows.push_back(g.support);
  }
  const RowSpace space(code.n(), rows);
  rep.expect(space.rank() == code.stabilizer_supports().size(), "reduced generators are independent");
  bool spans = true;
  for (const auto& v : code.stabilizer_supports()) spans = spans && space.contains(v);
  for (const auto& h : rows) spans = spans && code.stabilizer_space().contains(h);
  rep.expect(spans, "reduced and canonical generators span the same space");
  return rep;
}

CheckReport verify_thm2(int m) {
  check_even(m);
  CheckReport rep = start("thm2", m);
  const QrmCode code(m);
  const auto pairs = ordered_pairs(m);
  sweep(rep, pairs.size(), [&](std::size_t t, CheckReport& part) {
    const auto [i, j] = pairs[t];
    const Permutation p = perm_P(i, j, m);
    const Permutation q = perm_Q(i, j, m);
    part.expect(preserves_stabilizers(fold_swap(p), code).ok, "U_S(P" + pair_name(i, j) + ")");
    part.expect(preserves_stabilizers(fold_phase(p), code).ok, "U_P(P" + pair_name(i, j) + ")");
    part.expect(preserves_stabilizers(fold_swap(q), code).ok, "U_S(Q" + pair_name(i, j) + ")");
    part.expect(preserves_stabilizers(fold_phase(q), code).ok, "U_P(Q" + pair_name(i, j) + ")");
  });
  return rep;
}

CheckReport verify_thm3(int m, const VerifyOptions& opts) {
  check_even(m);
  CheckReport rep = start("thm3", m);
  const QrmCode code(m);
  const auto sets = pair_sets_for_sweep(m, opts.sample, opts.seed);
  sweep(rep, sets.size(), [&](std::size_t t, CheckReport& part) {
    const auto res = preserves_stabilizers(fold_phase(perm_Q(sets[t])), code);
    part.expect(res.ok, "U_P(Q(K)) for K=" + sets[t].to_string() + (res.ok ? "" : ": " + res.witness->reason));
  });
  return rep;
}

CheckReport verify_thm4(int m, const VerifyOptions& opts) {
  check_even(m);
  CheckReport rep = start("thm4", m);
  const QrmCode code(m);
  const auto sets = pair_sets_for_sweep(m, opts.sample, opts.seed);
  sweep(rep, sets.size(), [&](std::size_t t, CheckReport& part) {
    const Tableau want = tableau_of(code.k(), predicted_fold_phase_gates(code, sets[t]));
    expect_action(part, fold_phase(perm_Q(sets[t])), code, want, "U_P(Q(K)) for K=" + sets[t].to_string());
  });
  return rep;
}

CheckReport verify_thm5(int m, const VerifyOptions& opts) {
  check_even(m);
  CheckReport rep = start("thm5", m);
  const QrmCode code(m);
  const auto sets = pair_sets_for_sweep(m, opts.sample, opts.seed);
  sweep(rep, sets.size(), [&](std::size_t t, CheckReport& part) {
    const PairSet& k = sets[t];
    Circuit c(m);
    for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) c.append(fold_phase(perm_Q(k.subset(mask))));
    part.expect(c.depth() == (std::size_t{1} << k.size()), "depth of the product for K=" + k.to_string());
    const Tableau want = tableau_of(code.k(), predicted_fold_product_gates(code, k));
    expect_action(part, c, code, want, "product over L in K for K=" + k.to_string());
  });
  return rep;
}

CheckReport verify_cor5(int m) {
  check_even(m);
  CheckReport rep = start("cor5", m);
  Synthesizer syn(m);
  const QrmCode& code = syn.code();
  const int k = static_cast<int>(code.k());
  const std::size_t s_depth = std::size_t{1} << (m / 2);
  const GateKind native = (m / 2) % 2 == 0 ? GateKind::S : GateKind::SDG;
  for (int b = 1; b <= k; ++b) {
    const auto& li = code.lookup(b);
    // Parity rule: the raw product realizes S or S^dagger according to m/2.
    Circuit raw(m);
    const PairSet kset = s_pair_set(li.set);
    for (std::uint32_t mask = 0; mask < (1u << kset.size()); ++mask) raw.append(fold_phase(perm_Q(kset.subset(mask))));
    expect_action(rep, raw, code, tableau_of(code.k(), {logical_gate(native, b)}), "product for S on " + std::to_string(b));
    for (bool dagger : {false, true}) {
      const std::string what = std::string(dagger ? "SDG(" : "S(") + std::to_string(b) + ")";
      try {
        const Circuit c = syn.synth_S(b, dagger);
        rep.expect(c.depth() == s_depth, what + " depth " + std::to_string(c.depth()));
      } catch (const SynthesisError& e) {
        rep.fail(e.what());
      }
    }
  }
  const std::size_t cz_depth = std::size_t{1} << (m / 2 - 1);
  for (int b = 1; b <= k; ++b) {
    for (int b2 = b + 1; b2 <= k; ++b2) {
      if ((code.lookup(b).set & code.lookup(b2).set).size() != m / 2 - 1) continue;
      try {
        const Circuit c = syn.synth_CZ00_adjacent(b, b2);
        rep.expect(c.depth() == cz_depth, "CZ00(" + std::to_string(b) + "," + std::to_string(b2) + ") depth " + std::to_string(c.depth()));
      } catch (const SynthesisError& e) {
        rep.fail(e.what());
      }
    }
  }
  return rep;
}

CheckReport verify_thm6(int m) {
  check_even(m);
  CheckReport rep = start("thm6", m);
  Synthesizer syn(m);
  const QrmCode& code = syn.code();
  expect_action(rep, transversal(GateKind::H, m), code, tableau_of(code.k(), predicted_transversal_h_gates(code)), "H on every qubit");
  for (int b = 1; b <= static_cast<int>(code.k()); ++b) {
    try {
      Circuit c = syn.synth_H(b);
      c.append(syn.synth_H(b));
      expect_action(rep, c, code, Tableau::identity(code.k()), "H(" + std::to_string(b) + ") twice");
    } catch (const SynthesisError& e) {
      rep.fail(e.what());
    }
  }
  return rep;
}

CheckReport verify_thm7(int m) {
  check_even(m);
  CheckReport rep = start("thm7", m);
  Synthesizer syn(m);
  const QrmCode& code = syn.code();
  const int k = static_cast<int>(code.k());
  for (int b = 1; b <= k; ++b) {
    for (int b2 = b + 1; b2 <= k; ++b2) {
      const std::string ops = "(" + std::to_string(b) + "," + std::to_string(b2) + ")";
      try {
        const Circuit sw = syn.synth_SW(b, b2);
        const std::size_t c = adjacent_chain(code.lookup(b).set, code.lookup(b2).set).size() - 1;
        if (c > 1) rep.expect(sw.meta().value("chain_swaps", 0) == static_cast<int>(2 * c - 1), "SW" + ops + " chain length");
        rep.expect(true, "SW" + ops);
        syn.synth_CZ00(b, b2);
        rep.expect(true, "CZ00" + ops);
      } catch (const SynthesisError& e) {
        rep.fail(e.what());
      }
    }
  }
  return rep;
}

CheckReport verify_tables_m4() {
  constexpr int m = 4;
  CheckReport rep = start("tables-m4", m);
  const QrmCode code(m);
  const std::size_t k = code.k();

  for (const auto& row : golden_m4::kVA) {
    rep.expect(vector_from_set(parse_index_set(m, row.set)) == BitVector::from_string(row.bits), "v_" + std::string(row.set));
  }
  const auto& labels = code.stabilizer_labels();
  rep.expect(labels.size() == golden_m4::kGX.size() && labels.size() == golden_m4::kGZ.size(), "stabilizer count");
  for (std::size_t t = 0; t < labels.size() && t < golden_m4::kGX.size(); ++t) {
    const BitVector want_x = BitVector::from_string(golden_m4::kGX[t].bits);
    const BitVector want_z = BitVector::from_string(golden_m4::kGZ[t].bits);
    rep.expect(labels[t] == parse_index_set(m, golden_m4::kGX[t].set) && code.stabilizer_supports()[t] == want_x &&
                   code.stabilizer_supports()[t] == want_z,
               "g_x/g_z(" + std::string(golden_m4::kGX[t].set) + ")");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const int pos = static_cast<int>(i + 1);
    rep.expect(code.lookup(pos).set == parse_index_set(m, golden_m4::kLogicalX[i].set), "B_" + std::to_string(pos));
    rep.expect(code.logical_x(pos) == BitVector::from_string(golden_m4::kLogicalX[i].bits), "logical X " + std::to_string(pos));
    rep.expect(code.logical_z(pos) == BitVector::from_string(golden_m4::kLogicalZ[i].bits), "logical Z " + std::to_string(pos));
  }
  const auto reduced = weight_reduced_stabilizers(code, IndexSet(m, {4}));
  for (std::size_t t = 0; t < reduced.size() && t < golden_m4::kHX.size(); ++t) {
    rep.expect(reduced[t].label == parse_index_set(m, golden_m4::kHX[t].set) &&
                   reduced[t].support == BitVector::from_string(golden_m4::kHX[t].bits) &&
                   reduced[t].support == BitVector::from_string(golden_m4::kHZ[t].bits),
               "h_x/h_z(" + std::string(golden_m4::kHX[t].set) + ")");
  }

  for (const auto& row : golden_m4::kFoldPhase) {
    const PairSet kset = parse_pair_set(m, row.pairs);
    const Tableau want = tableau_of(k, parse_logical_gates(row.gates));
    expect_action(rep, fold_phase(perm_Q(kset)), code, want, "U_P(Q(K)) for K={" + std::string(row.pairs) + "}");
    rep.expect(tableau_of(k, predicted_fold_phase_gates(code, kset)) == want, "closed form for K={" + std::string(row.pairs) + "}");
  }
  for (const auto& row : golden_m4::kFoldProduct) {
    const PairSet kset = parse_pair_set(m, row.pairs);
    Circuit c(m);
    for (std::uint32_t mask = 0; mask < (1u << kset.size()); ++mask) c.append(fold_phase(perm_Q(kset.subset(mask))));
    const Tableau want = tableau_of(k, parse_logical_gates(row.gates));
    expect_action(rep, c, code, want, "product for K={" + std::string(row.pairs) + "}");
  }
  for (const auto& row : golden_m4::kLayerImages) {
    const std::string layer(row.layer);
    const Permutation pi = layer[3] == 'P' ? perm_P(1, 2, m) : perm_Q(1, 2, m);
    const Circuit c = layer[1] == 'S' ? fold_swap(pi) : fold_phase(pi);
    const auto a = analyze(c, code);
    if (!a.preservation.ok) {
      rep.fail(layer + ": stabilizer group not preserved");
      continue;
    }
    rep.expect(*a.action == tableau_of(k, parse_logical_gates(row.gates)), layer + " = " + std::string(row.gates));
    for (std::size_t i = 0; i < k; ++i) {
      rep.expect(a.action->x_image(i) == parse_logical_pauli(k, row.images[2 * i]), layer + " image of X" + std::to_string(i + 1));
      rep.expect(a.action->z_image(i) == parse_logical_pauli(k, row.images[2 * i + 1]), layer + " image of Z" + std::to_string(i + 1));
    }
  }

  // S(2) and CZ00(2,3) against the dense oracle on all 64 encoded basis states.
  Synthesizer syn(code);
  for (const Gate& g : {logical_gate(GateKind::S, 2), logical_gate(GateKind::CZ00, 2, 3)}) {
    const Circuit c = g.kind == GateKind::S ? syn.synth_S(2) : syn.synth_CZ00_adjacent(2, 3);
    const auto oracle = oracle_statevector(c, code);
    const DenseMatrix want = unitary_of(k, {g});
    rep.expect(oracle.max_leakage < 1e-10 && equal_up_to_global_phase(oracle.unitary, want, 1e-10), "oracle for " + logical_gate_label(g));
  }
  return rep;
}

}  // namespace qrm
