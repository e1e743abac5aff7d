#include "qrm/synth.h"

#include <deque>
#include <mutex>

#include "qrm/engine.h"

namespace qrm {

std::string_view h_letter_name(HLetter l) {
  switch (l) {
    case HLetter::HN:
      return "HN";
    case HLetter::S_B:
      return "S_B";
    case HLetter::SDG_B:
      return "SDG_B";
    case HLetter::S_BC:
      return "S_Bc";
    case HLetter::SDG_BC:
      return "SDG_Bc";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxHWord = 9;
constexpr HLetter kHLetters[] = {HLetter::HN, HLetter::S_B, HLetter::SDG_B, HLetter::S_BC, HLetter::SDG_BC};

std::vector<Gate> model_gates(HLetter l) {
  switch (l) {
    case HLetter::HN:
      return {Gate::one(GateKind::H, 0), Gate::one(GateKind::H, 1), Gate::two(GateKind::SW, 0, 1)};
    case HLetter::S_B:
      return {Gate::one(GateKind::S, 0)};
    case HLetter::SDG_B:
      return {Gate::one(GateKind::SDG, 0)};
    case HLetter::S_BC:
      return {Gate::one(GateKind::S, 1)};
    case HLetter::SDG_BC:
      return {Gate::one(GateKind::SDG, 1)};
  }
  return {};
}

std::string model_key(const Tableau& t, bool parity) {
  std::string key(parity ? "1" : "0");
  for (const auto& line : t.describe()) key += "|" + line;
  return key;
}

std::vector<HLetter> search_h_word() {
  struct Node {
    Tableau t;
    bool parity;
    std::vector<HLetter> word;
  };
  const Tableau target = tableau_of(2, {Gate::one(GateKind::H, 0)});
  std::map<std::string, bool> seen;
  std::deque<Node> queue;
  queue.push_back({Tableau::identity(2), false, {}});
  seen[model_key(queue.front().t, false)] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (!node.parity && node.t == target) return node.word;
    if (node.word.size() == kMaxHWord) continue;
    for (HLetter l : kHLetters) {
      Node next{node.t.then(model_gates(l)), node.parity != (l == HLetter::HN), node.word};
      next.word.push_back(l);
      auto [it, fresh] = seen.emplace(model_key(next.t, next.parity), true);
      if (fresh) queue.push_back(std::move(next));
    }
  }
  throw SynthesisError("no word for H(B) within the search length");
}

Circuit phase_product(int m, const PairSet& k) {
  Circuit c(m);
  for (std::uint32_t mask = 0; mask < (1u << k.size()); ++mask) c.append(fold_phase(perm_Q(k.subset(mask))));
  return c;
}

}  // namespace

const std::vector<HLetter>& h_word() {
  static std::once_flag once;
  static std::vector<HLetter> word;
  std::call_once(once, [] { word = search_h_word(); });
  return word;
}

PairSet s_pair_set(const IndexSet& b) {
  const int m = b.m();
  if (b.size() != m / 2) throw std::invalid_argument("logical index must have m/2 elements");
  const auto first = b.members();
  const auto second = b.complement().members();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t t = 0; t < first.size(); ++t) pairs.emplace_back(first[t], second[t]);
  return PairSet(m, std::move(pairs));
}

PairSet cz00_pair_set(const IndexSet& b, const IndexSet& b2) {
  const int m = b.m();
  if (b.size() != m / 2 || b2.size() != m / 2) throw std::invalid_argument("logical index must have m/2 elements");
  if ((b & b2).size() != m / 2 - 1) throw std::invalid_argument("index sets " + b.to_string() + " and " + b2.to_string() + " are not adjacent");
  const auto first = (b & b2).members();
  const auto second = (b | b2).complement().members();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t t = 0; t < first.size(); ++t) pairs.emplace_back(first[t], second[t]);
  return PairSet(m, std::move(pairs));
}

std::vector<IndexSet> adjacent_chain(const IndexSet& b, const IndexSet& b2) {
  if (b.m() != b2.m() || b.size() != b2.size()) throw std::invalid_argument("chain endpoints differ in size");
  std::vector<IndexSet> chain{b};
  IndexSet cur = b;
  while (!(cur == b2)) {
    const int out = (cur - b2).members().front();
    const int in = (b2 - cur).members().front();
    cur = (cur - IndexSet(cur.m(), {out})) | IndexSet(cur.m(), {in});
    chain.push_back(cur);
  }
  return chain;
}

std::string logical_gate_label(const Gate& g) {
  std::string name = g.kind == GateKind::CZ ? "CZ11" : std::string(gate_name(g.kind));
  name += "(" + std::to_string(g.a + 1);
  if (g.arity() == 2) name += "," + std::to_string(g.b + 1);
  return name + ")";
}

Synthesizer::Synthesizer(int m) : code_(m) {}
Synthesizer::Synthesizer(const QrmCode& code) : code_(code) {}

void Synthesizer::check_position(int b) const {
  if (b < 1 || b > static_cast<int>(code_.k())) {
    throw std::invalid_argument("logical position " + std::to_string(b) + " outside 1.." + std::to_string(code_.k()));
  }
}

void Synthesizer::check_pair(int b, int b2) const {
  check_position(b);
  check_position(b2);
  if (b == b2) throw std::invalid_argument("two-qubit logical gate needs distinct operands");
}

Gate Synthesizer::gate(GateKind kind, int b, int b2) const { return logical_gate(kind, b, b2); }

Circuit Synthesizer::verified(Circuit c, const Tableau& target, const std::string& label) const {
  const auto a = analyze(c, code_);
  if (!a.preservation.ok) {
    const auto& w = *a.preservation.witness;
    throw SynthesisError(label + ": stabilizer " + std::string(1, w.type) + w.label.to_string() + " not preserved (" + w.reason + ")");
  }
  if (!(*a.action == target)) throw SynthesisError(label + ": logical action differs from the target");
  c.meta()["gate"] = label;
  c.meta()["m"] = code_.m();
  return c;
}

Circuit Synthesizer::verified_gate(Circuit c, const Gate& g) const {
  return verified(std::move(c), tableau_of(code_.k(), {g}), logical_gate_label(g));
}

Circuit Synthesizer::synth_S(int b, bool dagger) {
  check_position(b);
  const Gate g = gate(dagger ? GateKind::SDG : GateKind::S, b);
  const auto key = std::make_tuple(g.kind, g.a, g.b);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const bool native_dagger = (m() / 2) % 2 == 1;
  Circuit c = phase_product(m(), s_pair_set(code_.lookup(b).set));
  if (native_dagger != dagger) c = c.inverse();
  c = verified_gate(std::move(c), g);
  c.meta()["construction"] = "fold_phase product";
  return cache_[key] = c;
}

Circuit Synthesizer::synth_CZ00_adjacent(int b, int b2) {
  check_pair(b, b2);
  const Gate g = gate(GateKind::CZ00, b, b2);
  Circuit c = phase_product(m(), cz00_pair_set(code_.lookup(b).set, code_.lookup(b2).set));
  c = verified_gate(std::move(c), g);
  c.meta()["construction"] = "fold_phase product";
  return c;
}

Circuit Synthesizer::synth_H(int b) {
  check_position(b);
  const Gate g = gate(GateKind::H, b);
  const auto key = std::make_tuple(g.kind, g.a, g.b);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const int bc = position(code_.lookup(b).set.complement());
  Circuit c(m());
  for (HLetter l : h_word()) {
    switch (l) {
      case HLetter::HN:
        c.append(transversal(GateKind::H, m()));
        break;
      case HLetter::S_B:
        c.append(synth_S(b, false));
        break;
      case HLetter::SDG_B:
        c.append(synth_S(b, true));
        break;
      case HLetter::S_BC:
        c.append(synth_S(bc, false));
        break;
      case HLetter::SDG_BC:
        c.append(synth_S(bc, true));
        break;
    }
  }
  c = verified_gate(std::move(c), g);
  std::string word;
  for (HLetter l : h_word()) word += (word.empty() ? "" : " ") + std::string(h_letter_name(l));
  c.meta()["construction"] = word;
  return cache_[key] = c;
}

Circuit Synthesizer::synth_SW(int b, int b2) {
  check_pair(b, b2);
  const Gate g = gate(GateKind::SW, std::min(b, b2), std::max(b, b2));
  const auto key = std::make_tuple(g.kind, g.a, g.b);
  if (auto it = cache_.find(key); it != cache_.end()) {
    Circuit c = it->second;
    return c;
  }
  const auto chain = adjacent_chain(code_.lookup(b).set, code_.lookup(b2).set);
  Circuit c(m());
  if (chain.size() == 2) {
    for (int round = 0; round < 3; ++round) {
      c.append(synth_CZ00_adjacent(b, b2));
      c.append(synth_H(b));
      c.append(synth_H(b2));
    }
    c = verified_gate(std::move(c), g);
    c.meta()["construction"] = "adjacent CZ00/H rounds";
  } else {
    std::vector<int> pos;
    for (const auto& s : chain) pos.push_back(position(s));
    const std::size_t n = pos.size() - 1;
    for (std::size_t j = 0; j < n; ++j) c.append(synth_SW(pos[j], pos[j + 1]));
    for (std::size_t j = n - 1; j-- > 0;) c.append(synth_SW(pos[j], pos[j + 1]));
    c = verified_gate(std::move(c), g);
    c.meta()["construction"] = "adjacent swap chain";
    c.meta()["chain_swaps"] = 2 * n - 1;
  }
  return cache_[key] = c;
}

Circuit Synthesizer::synth_CZ00(int b, int b2) {
  check_pair(b, b2);
  const Gate g = gate(GateKind::CZ00, std::min(b, b2), std::max(b, b2));
  const auto key = std::make_tuple(g.kind, g.a, g.b);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto chain = adjacent_chain(code_.lookup(b).set, code_.lookup(b2).set);
  Circuit c(m());
  if (chain.size() == 2) {
    c = synth_CZ00_adjacent(b, b2);
  } else {
    std::vector<int> pos;
    for (const auto& s : chain) pos.push_back(position(s));
    const std::size_t n = pos.size() - 1;
    for (std::size_t j = 0; j + 1 < n; ++j) c.append(synth_SW(pos[j], pos[j + 1]));
    c.append(synth_CZ00_adjacent(pos[n - 1], pos[n]));
    for (std::size_t j = n - 1; j-- > 0;) c.append(synth_SW(pos[j], pos[j + 1]));
    c = verified_gate(std::move(c), g);
    c.meta()["construction"] = "adjacent CZ00 through swap chain";
  }
  return cache_[key] = c;
}

Circuit Synthesizer::synth_derived(GateKind kind, int b, int b2) {
  Gate g;
  switch (kind) {
    case GateKind::Z:
    case GateKind::X:
      check_position(b);
      g = gate(kind, b);
      break;
    case GateKind::CZ:
      check_pair(b, b2);
      g = gate(kind, std::min(b, b2), std::max(b, b2));
      break;
    case GateKind::CX:
      check_pair(b, b2);
      g = gate(kind, b, b2);
      break;
    default:
      throw std::invalid_argument("derived gates are CZ, CX, Z and X");
  }
  const auto key = std::make_tuple(g.kind, g.a, g.b);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Circuit c(m());
  std::string construction;
  switch (kind) {
    case GateKind::Z:
      c.append(synth_S(b));
      c.append(synth_S(b));
      construction = "S S";
      break;
    case GateKind::X:
      c.append(synth_H(b));
      c.append(synth_derived(GateKind::Z, b));
      c.append(synth_H(b));
      construction = "H Z H";
      break;
    case GateKind::CZ:
      c.append(synth_CZ00(b, b2));
      c.append(synth_derived(GateKind::Z, b));
      c.append(synth_derived(GateKind::Z, b2));
      construction = "CZ00 Z Z";
      break;
    default:
      c.append(synth_H(b2));
      c.append(synth_derived(GateKind::CZ, b, b2));
      c.append(synth_H(b2));
      construction = "H(target) CZ11 H(target)";
      break;
  }
  c = verified_gate(std::move(c), g);
  c.meta()["construction"] = construction;
  return cache_[key] = c;
}

Circuit Synthesizer::synth_gate(const Gate& g) {
  const int b = static_cast<int>(g.a) + 1;
  const int b2 = static_cast<int>(g.b) + 1;
  switch (g.kind) {
    case GateKind::H:
      return synth_H(b);
    case GateKind::S:
      return synth_S(b, false);
    case GateKind::SDG:
      return synth_S(b, true);
    case GateKind::SW:
      return synth_SW(b, b2);
    case GateKind::CZ00:
      return synth_CZ00(b, b2);
    case GateKind::CZ:
    case GateKind::CX:
    case GateKind::X:
    case GateKind::Z:
      return synth_derived(g.kind, b, b2);
  }
  throw std::invalid_argument("unknown gate kind");
}

std::string Synthesizer::asymptotic_label(const Gate& g) const {
  switch (g.kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::SDG:
    case GateKind::X:
    case GateKind::Z:
      return "sqrt(n)";
    default: {
      const auto chain = adjacent_chain(code_.lookup(static_cast<int>(g.a) + 1).set, code_.lookup(static_cast<int>(g.b) + 1).set);
      return chain.size() == 2 ? "sqrt(n)" : "sqrt(n)·log(n)";
    }
  }
}

std::vector<Gate> Synthesizer::clifford_word(const Tableau& target) const {
  const std::size_t k = code_.k();
  if (target.qubits() != k) throw std::invalid_argument("target tableau has the wrong number of qubits");
  if (!target.is_symplectic()) throw std::invalid_argument("target tableau is not symplectic");

  // Gates applied after the target until the action is the identity.
  std::vector<Gate> w;
  Tableau cur = target;
  auto apply = [&](const Gate& g) {
    w.push_back(g);
    cur = cur.then(g);
  };
  auto one = [](GateKind kind, std::size_t q) { return Gate::one(kind, static_cast<std::uint32_t>(q)); };
  auto two = [](GateKind kind, std::size_t a, std::size_t b) {
    return Gate::two(kind, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  };
  auto cx = [&](std::size_t c, std::size_t t) {
    apply(one(GateKind::H, t));
    apply(two(GateKind::CZ, std::min(c, t), std::max(c, t)));
    apply(one(GateKind::H, t));
  };

  for (std::size_t i = 0; i < k; ++i) {
    // Image of X_i becomes X-type on qubits >= i, then X_i alone.
    for (std::size_t q = i; q < k; ++q) {
      const PhasedPauli& p = cur.x_image(i);
      if (p.x.get(q) && p.z.get(q)) {
        apply(one(GateKind::S, q));
      } else if (p.z.get(q)) {
        apply(one(GateKind::H, q));
      }
    }
    std::size_t pivot = i;
    while (!cur.x_image(i).x.get(pivot)) ++pivot;
    if (pivot != i) apply(two(GateKind::SW, i, pivot));
    for (std::size_t q = i + 1; q < k; ++q) {
      if (cur.x_image(i).x.get(q)) cx(i, q);
    }

    // Image of Z_i becomes Z_i alone without disturbing X_i.
    {
      const PhasedPauli& p = cur.z_image(i);
      if (p.x.get(i)) {
        apply(one(GateKind::H, i));
        apply(one(GateKind::S, i));
        apply(one(GateKind::H, i));
      }
    }
    for (std::size_t q = i + 1; q < k; ++q) {
      const PhasedPauli& p = cur.z_image(i);
      if (p.x.get(q) && p.z.get(q)) {
        apply(one(GateKind::S, q));
        apply(one(GateKind::H, q));
      } else if (p.x.get(q)) {
        apply(one(GateKind::H, q));
      }
    }
    for (std::size_t q = i + 1; q < k; ++q) {
      if (cur.z_image(i).z.get(q)) cx(q, i);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (cur.x_image(i).phase != 0) apply(one(GateKind::Z, i));
    if (cur.z_image(i).phase != 0) apply(one(GateKind::X, i));
  }
  if (!cur.is_identity()) throw SynthesisError("symplectic elimination did not reach the identity");

  std::vector<Gate> word;
  for (auto it = w.rbegin(); it != w.rend(); ++it) word.push_back(it->inverse());
  if (!(tableau_of(k, word) == target)) throw SynthesisError("elimination word does not reproduce the target");
  return word;
}

Circuit Synthesizer::compile_clifford(const Tableau& target) {
  const auto word = clifford_word(target);
  Circuit c(m());
  for (const auto& g : word) c.append(synth_gate(g));
  c = verified(std::move(c), target, "clifford");
  c.meta()["letters"] = word.size();
  return c;
}

}  // namespace qrm
