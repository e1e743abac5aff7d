#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrm/depth_bound.h"
#include "qrm/engine.h"
#include "qrm/json_io.h"
#include "qrm/parse.h"
#include "qrm/qrm_code.h"
#include "qrm/synth.h"
#include "qrm/verify.h"

using namespace qrm;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_even(int m) {
  if (m < 2 || m > kMaxM || m % 2 != 0) throw UsageError("--m must be an even integer in [2, " + std::to_string(kMaxM) + "]");
}

// "2" is a canonical position; anything with a comma is an index set.
int resolve_qubit(const QrmCode& code, const std::string& text) {
  if (text.find(',') != std::string::npos || text.find('{') != std::string::npos) {
    const IndexSet b = parse_index_set(code.m(), text);
    return code.lookup(b).position;
  }
  std::size_t used = 0;
  const int pos = std::stoi(text, &used);
  if (used != text.size()) throw UsageError("bad logical qubit '" + text + "'");
  code.lookup(pos);
  return pos;
}

// Splits at commas outside braces: "2,3" -> {"2", "3"}, "{1,2},{1,3}" -> two sets.
std::vector<std::string> split_operands(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if ((ch == ',' || ch == ' ' || ch == ';') && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> parse_m_range(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int m = lo + (lo % 2); m <= hi; m += 2) out.push_back(m);
  } else {
    for (const auto& part : split_operands(text)) out.push_back(std::stoi(part));
  }
  if (out.empty()) throw UsageError("empty m range '" + text + "'");
  for (int m : out) require_even(m);
  return out;
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

// ---- code ----

struct CodeArgs {
  int m = 0;
  bool reduced = false;
  bool logicals = false;
  bool json_out = false;
  std::string empty_factors;
};

int cmd_code(const CodeArgs& a) {
  require_even(a.m);
  const QrmCode code(a.m);
  std::optional<IndexSet> factors;
  if (!a.empty_factors.empty()) factors = parse_index_set(a.m, a.empty_factors);
  if (a.json_out) {
    std::cout << code_to_json(code, a.reduced, factors).dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "QRM(" << a.m << "): n=" << code.n() << " k=" << code.k() << " d=" << code.d() << "\n";
  if (a.reduced) {
    std::cout << "weight-reduced stabilizers (X and Z), weight " << (std::size_t{1} << (a.m / 2 + 1)) << ":\n";
    for (const auto& g : weight_reduced_stabilizers(code, factors)) {
      std::cout << "  h_" << g.label.to_string() << " factors " << g.factors.to_string() << "  " << g.support.to_string() << "\n";
    }
  } else {
    std::cout << "stabilizers g_x(A) = X(v_A), g_z(A) = Z(v_A):\n";
    for (std::size_t t = 0; t < code.stabilizer_labels().size(); ++t) {
      std::cout << "  v_" << code.stabilizer_labels()[t].to_string() << "  " << code.stabilizer_supports()[t].to_string() << "\n";
    }
  }
  if (a.logicals) {
    std::cout << "logical operators X(B) = X(v_B), Z(B) = Z(v_{B^c}):\n";
    for (const auto& li : code.logical_indices()) {
      std::cout << "  " << li.position << "  B=" << li.set.to_string() << "  X " << code.logical_x(li.position).to_string() << "  Z "
                << code.logical_z(li.position).to_string() << "\n";
    }
  }
  return kExitPass;
}

// ---- synth ----

struct SynthArgs {
  std::string kind;
  int m = 0;
  std::string qubit;
  std::string qubits;
  std::string gates;
  std::string out;
};

int cmd_synth(const SynthArgs& a) {
  require_even(a.m);
  Synthesizer syn(a.m);
  const QrmCode& code = syn.code();
  Circuit c;
  std::string asymptotic;
  if (a.kind == "clifford") {
    if (a.gates.empty()) throw UsageError("synth clifford needs --gates");
    auto gates = parse_logical_gates(a.gates);
    for (const auto& g : gates) {
      if (g.a >= code.k() || (g.arity() == 2 && g.b >= code.k())) throw UsageError("gate operand out of range for m=" + std::to_string(a.m));
    }
    c = syn.compile_clifford(tableau_of(code.k(), gates));
    c.meta()["gate"] = a.gates;
    asymptotic = "other";
  } else {
    const auto kind = parse_gate_name(a.kind == "cz11" ? "CZ" : [&] {
      std::string up = a.kind;
      for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      return up;
    }());
    if (!kind) throw UsageError("unknown gate kind '" + a.kind + "'");
    std::vector<int> ops;
    if (gate_arity(*kind) == 1) {
      if (a.qubit.empty()) throw UsageError(a.kind + " needs --qubit");
      ops.push_back(resolve_qubit(code, a.qubit));
    } else {
      const auto parts = split_operands(a.qubits);
      if (parts.size() != 2) throw UsageError(a.kind + " needs --qubits with two operands");
      for (const auto& p : parts) ops.push_back(resolve_qubit(code, p));
      if (ops[0] == ops[1]) throw UsageError("operands must differ");
    }
    const Gate g = ops.size() == 1 ? logical_gate(*kind, ops[0]) : logical_gate(*kind, ops[0], ops[1]);
    c = syn.synth_gate(g);
    asymptotic = syn.asymptotic_label(g);
  }
  const DepthReport rep = depth_report(c, asymptotic);
  if (a.out.empty() || a.out == "-") {
    std::cout << circuit_to_json(c).dump(2) << "\n";
    std::cerr << depth_report_to_json(rep).dump() << "\n";
  } else {
    write_json(circuit_to_json(c), a.out);
    std::cout << depth_report_to_json(rep).dump(2) << "\n";
  }
  return kExitPass;
}

// ---- verify ----

struct VerifyArgs {
  std::string theorem;
  std::string m_range = "2..6";
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  bool json_out = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> labels;
  if (a.theorem == "all") {
    labels = theorem_labels();
  } else {
    bool known = false;
    for (const auto& l : theorem_labels()) known = known || l == a.theorem;
    if (!known) throw UsageError("unknown theorem label '" + a.theorem + "'");
    labels.push_back(a.theorem);
  }
  const auto ms = parse_m_range(a.m_range);
  const VerifyOptions opts{a.sample, a.seed};
  bool all_pass = true;
  json reports = json::array();
  for (const auto& label : labels) {
    const std::vector<int> run_ms = label == "tables-m4" ? std::vector<int>{4} : ms;
    for (int m : run_ms) {
      const CheckReport r = verify_theorem(label, m, opts);
      all_pass = all_pass && r.passed();
      if (a.json_out) {
        reports.push_back(check_report_to_json(r));
        continue;
      }
      std::cout << (r.passed() ? "PASS " : "FAIL ") << label << " m=" << m << "  checks=" << r.checks << " failures=" << r.failure_count;
      std::cout << "  " << std::fixed << std::setprecision(3) << r.seconds << "s";
      if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      std::cout << "\n" << std::flush;
      for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    }
  }
  if (a.json_out) std::cout << json{{"passed", all_pass}, {"reports", reports}}.dump(2) << "\n";
  return all_pass ? kExitPass : kExitFail;
}

// ---- bound ----

struct BoundArgs {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::string formula = "product";
  bool json_out = false;
};

int cmd_bound(const BoundArgs& a) {
  if (a.l < 1 || a.l > a.n) throw UsageError("need 1 <= l <= n");
  if (a.k > a.n) throw UsageError("need k <= n");
  if (a.formula != "product" && a.formula != "sum") throw UsageError("--formula must be product or sum");
  const auto primary = a.formula == "product" ? CliffordCountFormula::Product : CliffordCountFormula::Sum;
  const DepthBound p = depth_lower_bound(a.n, a.k, a.l, CliffordCountFormula::Product);
  const DepthBound s = depth_lower_bound(a.n, a.k, a.l, CliffordCountFormula::Sum);
  const DepthBound& chosen = primary == CliffordCountFormula::Product ? p : s;
  const BigInt size_cl = clifford_group_size(a.l, primary);
  if (a.json_out) {
    std::cout << json{{"n", a.n},
                      {"k", a.k},
                      {"l", a.l},
                      {"formula", a.formula},
                      {"bound", chosen.value_string()},
                      {"ceiling", chosen.ceiling},
                      {"product", {{"clifford_count", p.clifford_count.str()}, {"bound", p.value_string()}, {"ceiling", p.ceiling}}},
                      {"sum", {{"clifford_count", s.clifford_count.str()}, {"bound", s.value_string()}, {"ceiling", s.ceiling}}},
                      {"layer_count", chosen.layer_count.str()},
                      {"clifford_l", size_cl.str()}}
                     .dump(2)
              << "\n";
    return kExitPass;
  }
  std::cout << "n=" << a.n << " k=" << a.k << " l=" << a.l << " formula=" << a.formula << "\n";
  std::cout << "|C_l| = " << size_cl << "\n";
  std::cout << "N_{l,n} <= " << chosen.layer_count << "\n";
  std::cout << "product: |C_k| = " << p.clifford_count << "  log|C_k|/log N = " << p.value_string() << "  depth >= " << p.ceiling << "\n";
  std::cout << "sum:     |C_k| = " << s.clifford_count << "  log|C_k|/log N = " << s.value_string() << "  depth >= " << s.ceiling << "\n";
  std::cout << "bound = " << chosen.value_string() << "\n";
  return kExitPass;
}

// ---- check ----

struct CheckArgs {
  std::string path;
  int m = 0;
  std::string expect;
  bool json_out = false;
};

int cmd_check(const CheckArgs& a) {
  json doc;
  {
    std::ifstream in(a.path);
    if (!in) throw UsageError("cannot read " + a.path);
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("JSON parse error: ") + e.what());
    }
  }
  const Circuit c = circuit_from_json(doc);
  if (a.m != 0 && a.m != c.m()) throw UsageError("circuit has m=" + std::to_string(c.m()) + ", expected " + std::to_string(a.m));
  require_even(c.m());
  const QrmCode code(c.m());
  const auto an = analyze(c, code);

  std::optional<std::vector<Gate>> expected;
  std::string expected_text = a.expect;
  if (expected_text.empty() && c.meta().contains("gate") && c.meta()["gate"].is_string()) {
    expected_text = c.meta()["gate"].get<std::string>();
    try {
      expected = parse_logical_gates(expected_text);
    } catch (const std::invalid_argument&) {
      expected_text.clear();
    }
  } else if (!expected_text.empty()) {
    expected = parse_logical_gates(expected_text);
  }
  std::optional<bool> matches;
  if (expected && an.action) matches = *an.action == tableau_of(code.k(), *expected);
  const bool ok = an.preservation.ok && matches.value_or(true);

  if (a.json_out) {
    json j{{"m", c.m()}, {"depth", c.depth()}, {"preserves_stabilizers", an.preservation.ok}, {"passed", ok}};
    if (an.preservation.witness) {
      const auto& w = *an.preservation.witness;
      j["witness"] = {{"generator", std::string("g_") + w.type + "(" + w.label.to_string() + ")"}, {"reason", w.reason}};
    }
    if (an.action) {
      j["tableau"] = tableau_to_json(*an.action);
      if (an.action->is_diagonal()) j["diagonal_gates"] = diagonal_gate_list(*an.action);
    }
    if (matches) j["expected"] = {{"gates", expected_text}, {"matches", *matches}};
    std::cout << j.dump(2) << "\n";
    return ok ? kExitPass : kExitFail;
  }
  std::cout << "m=" << c.m() << " depth=" << c.depth() << " gates=" << c.gate_count() << "\n";
  if (!an.preservation.ok) {
    const auto& w = *an.preservation.witness;
    std::cout << "FAIL stabilizer group not preserved: g_" << w.type << "(" << w.label.to_string() << ") -> " << w.reason << "\n";
    return kExitFail;
  }
  std::cout << "stabilizer group preserved\n";
  std::cout << "logical action:\n";
  for (const auto& line : an.action->describe()) std::cout << "  " << line << "\n";
  if (an.action->is_identity()) {
    std::cout << "identity\n";
  } else if (an.action->is_diagonal()) {
    std::cout << "gates:";
    for (const auto& g : diagonal_gate_list(*an.action)) std::cout << " " << g;
    std::cout << "\n";
  }
  if (matches) std::cout << (*matches ? "PASS" : "FAIL") << " expected " << expected_text << "\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical Clifford compiler and verifier for quantum Reed-Muller codes"};
  app.require_subcommand(1);

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Print a code: parameters, stabilizers and logical operators");
  code->add_option("--m", code_args.m, "even m; n = 2^m")->required();
  code->add_flag("--reduced", code_args.reduced, "weight-reduced stabilizer generators");
  code->add_option("--empty-factors", code_args.empty_factors, "factor set for h_{} with --reduced, e.g. 4");
  code->add_flag("--logicals", code_args.logicals, "print the logical operator table");
  code->add_flag("--json", code_args.json_out, "emit the code as JSON");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Synthesize a verified logical gate circuit");
  synth->add_option("kind", synth_args.kind, "h, s, sdg, x, z, sw, cz00, cz (= cz11), cx or clifford")->required();
  synth->add_option("--m", synth_args.m, "even m")->required();
  synth->add_option("--qubit", synth_args.qubit, "position (2) or index set (1,3)");
  synth->add_option("--qubits", synth_args.qubits, "two positions (2,3) or sets ({1,2},{1,3})");
  synth->add_option("--gates", synth_args.gates, "logical gate list for clifford, e.g. \"H(1) CZ11(1,2)\"");
  synth->add_option("--out", synth_args.out, "circuit JSON path (stdout if omitted)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("--theorem", verify_args.theorem, "prop1, prop2, lemmas, thm1..thm7, cor5, tables-m4 or all")->required();
  verify->add_option("--m", verify_args.m_range, "m values: 4, 2,4 or 2..8");
  verify->add_option("--sample", verify_args.sample, "pair sets per sweep (0 = all)");
  verify->add_option("--seed", verify_args.seed, "sampling seed");
  verify->add_flag("--json", verify_args.json_out, "emit report JSON");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Depth lower bound for k-qubit logical Cliffords on n physical qubits");
  bound->add_option("--n", bound_args.n)->required();
  bound->add_option("--k", bound_args.k)->required();
  bound->add_option("--l", bound_args.l, "gate width")->required();
  bound->add_option("--formula", bound_args.formula, "Clifford count: product (default) or sum");
  bound->add_flag("--json", bound_args.json_out);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check a circuit JSON file against the code");
  check->add_option("circuit", check_args.path, "circuit JSON path")->required();
  check->add_option("--m", check_args.m, "expected m");
  check->add_option("--expect", check_args.expect, "expected logical gates, e.g. \"S(2)\"");
  check->add_flag("--json", check_args.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*code) return cmd_code(code_args);
    if (*synth) return cmd_synth(synth_args);
    if (*verify) return cmd_verify(verify_args);
    if (*bound) return cmd_bound(bound_args);
    if (*check) return cmd_check(check_args);
  } catch (const SynthesisError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
