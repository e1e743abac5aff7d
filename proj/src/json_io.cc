#include "qrm/json_io.h"

namespace qrm {

namespace {

json positions(const BitVector& v) { return json(v.positions()); }

json index_list(const IndexSet& s) { return json(s.members()); }

}  // namespace

json circuit_to_json(const Circuit& c) {
  json layers = json::array();
  for (const auto& layer : c.layers()) {
    json gates = json::array();
    for (const auto& g : layer.gates) {
      json q = json::array({g.a});
      if (g.arity() == 2) q.push_back(g.b);
      gates.push_back({{"g", std::string(gate_name(g.kind))}, {"q", q}});
    }
    layers.push_back({{"gates", gates}});
  }
  return {{"m", c.m()}, {"layers", layers}, {"meta", c.meta()}};
}

Circuit circuit_from_json(const json& j) {
  if (!j.is_object()) throw JsonFormatError("circuit must be a JSON object");
  if (!j.contains("m") || !j["m"].is_number_integer()) throw JsonFormatError("missing integer field 'm'");
  const int m = j["m"].get<int>();
  if (m < 1 || m > kMaxM) throw JsonFormatError("m out of range: " + std::to_string(m));
  if (!j.contains("layers") || !j["layers"].is_array()) throw JsonFormatError("missing array field 'layers'");
  Circuit c(m);
  const auto n = static_cast<std::int64_t>(c.qubits());
  std::size_t li = 0;
  for (const auto& layer : j["layers"]) {
    const std::string where = "layer " + std::to_string(li++);
    if (!layer.is_object() || !layer.contains("gates") || !layer["gates"].is_array()) {
      throw JsonFormatError(where + ": expected {\"gates\": [...]}");
    }
    GateLayer out;
    for (const auto& g : layer["gates"]) {
      if (!g.is_object() || !g.contains("g") || !g["g"].is_string() || !g.contains("q") || !g["q"].is_array()) {
        throw JsonFormatError(where + ": gate needs string 'g' and array 'q'");
      }
      const std::string name = g["g"].get<std::string>();
      const auto kind = parse_gate_name(name);
      if (!kind) throw JsonFormatError(where + ": unknown gate '" + name + "'");
      const auto& q = g["q"];
      if (static_cast<int>(q.size()) != gate_arity(*kind)) throw JsonFormatError(where + ": wrong operand count for " + name);
      std::uint32_t ops[2] = {0, 0};
      for (std::size_t t = 0; t < q.size(); ++t) {
        if (!q[t].is_number_integer()) throw JsonFormatError(where + ": positions must be integers");
        const auto p = q[t].get<std::int64_t>();
        if (p < 0 || p >= n) throw JsonFormatError(where + ": position " + std::to_string(p) + " out of range");
        ops[t] = static_cast<std::uint32_t>(p);
      }
      if (gate_arity(*kind) == 2 && ops[0] == ops[1]) throw JsonFormatError(where + ": repeated operand for " + name);
      out.gates.push_back(gate_arity(*kind) == 1 ? Gate::one(*kind, ops[0]) : Gate::two(*kind, ops[0], ops[1]));
    }
    try {
      c.add_layer(std::move(out));
    } catch (const std::exception& e) {
      throw JsonFormatError(where + ": " + e.what());
    }
  }
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw JsonFormatError("'meta' must be an object");
    c.meta() = j["meta"];
  }
  return c;
}

json code_to_json(const QrmCode& code, bool reduced, std::optional<IndexSet> empty_factors) {
  json stabs = json::array();
  if (reduced) {
    for (const auto& g : weight_reduced_stabilizers(code, empty_factors)) {
      stabs.push_back({{"label", index_list(g.label)}, {"factors", index_list(g.factors)}, {"support", positions(g.support)}});
    }
  } else {
    for (std::size_t t = 0; t < code.stabilizer_labels().size(); ++t) {
      stabs.push_back({{"label", index_list(code.stabilizer_labels()[t])}, {"support", positions(code.stabilizer_supports()[t])}});
    }
  }
  json logicals = json::array();
  for (const auto& li : code.logical_indices()) {
    logicals.push_back({{"position", li.position},
                        {"set", index_list(li.set)},
                        {"x_support", positions(code.logical_x(li.position))},
                        {"z_support", positions(code.logical_z(li.position))}});
  }
  return {{"m", code.m()},
          {"n", code.n()},
          {"k", code.k()},
          {"d", code.d()},
          {"stabilizers", {{"reduced", reduced}, {"x", stabs}, {"z", stabs}}},
          {"logicals", logicals}};
}

json depth_report_to_json(const DepthReport& r) {
  return {{"depth", r.depth}, {"kind_counts", r.kind_counts}, {"asymptotic", r.asymptotic}};
}

json check_report_to_json(const CheckReport& r) {
  return {{"label", r.label},   {"m", r.m},           {"checks", r.checks}, {"failure_count", r.failure_count},
          {"failures", r.failures}, {"passed", r.passed()}, {"seconds", r.seconds}, {"note", r.note}};
}

json tableau_to_json(const Tableau& t) {
  json xs = json::array();
  json zs = json::array();
  for (std::size_t i = 0; i < t.qubits(); ++i) {
    xs.push_back(t.x_image(i).to_string());
    zs.push_back(t.z_image(i).to_string());
  }
  return {{"x", xs}, {"z", zs}};
}

}  // namespace qrm
