#pragma once

#include <string>

#include "json.hpp"
#include "qcs/condition_compiler.hpp"
#include "qcs/qcondition.hpp"
#include "qcs/statevector.hpp"

namespace qcs {

using nlohmann::json;

// State file: {"n": int, "amplitudes": [[re, im], ...]} of length 2^n, index
// order 0..2^n-1 with q_1 as the most significant bit. Condition-space
// vectors carry an extra "space": "condition".
json state_to_json(const StateVector& s);
StateVector state_from_json(const json& j);

json qcondition_to_json(const QConditionVector& phi);
QConditionVector qcondition_from_json(const json& j);

bool is_condition_space(const json& j);

// Circuit file: {"n": int, "gates": [{"kind": "U"|"CU"|"CNOT"|"CCNOT",
// 1-based indices, "cv": 0|1 for CU, "u": four [re, im] pairs row-major for
// U/CU}]}.
json gate_to_json(const Gate& g);
Gate gate_from_json(const json& j);
json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

// Compiled parity circuit: the circuit format plus "target" and the condition
// text form.
json parity_circuit_to_json(const ParityCircuit& p);

json realization_plan_to_json(const RealizationPlan& plan);

}  // namespace qcs
