#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qrm/circuit.h"
#include "qrm/qrm_code.h"
#include "qrm/report.h"
#include "qrm/tableau.h"

namespace qrm {

using nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"m", "layers": [{"gates": [{"g", "q"}]}], "meta"} with 0-based positions.
json circuit_to_json(const Circuit& c);
// Throws JsonFormatError on a malformed document, unknown gate name, wrong
// operand count, out-of-range position or overlapping gates within a layer.
Circuit circuit_from_json(const json& j);

// m, n, k, d, stabilizer and logical supports as position lists, and the
// canonical index table. `empty_factors` is passed to weight_reduced_stabilizers.
json code_to_json(const QrmCode& code, bool reduced = false, std::optional<IndexSet> empty_factors = std::nullopt);

json depth_report_to_json(const DepthReport& r);
json check_report_to_json(const CheckReport& r);
// {"x": [...], "z": [...]} with one signed Pauli string per logical qubit.
json tableau_to_json(const Tableau& t);

}  // namespace qrm
