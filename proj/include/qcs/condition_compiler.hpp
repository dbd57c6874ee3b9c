#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcs/condition_core.hpp"
#include "qcs/qcondition.hpp"
#include "qcs/statevector.hpp"

namespace qcs {

// CNOT chain that accumulates a parity sum onto the target qubit; measuring
// the target yields the condition value.
struct ParityCircuit {
    Circuit circuit;
    int target;
    ParityCondition condition;
};

// Chains the masked qubits in ascending order; the largest-index qubit is the
// target, so popcount(mask) - 1 CNOTs are emitted. Requires a nonzero mask.
ParityCircuit compile_parity(const ParityCondition& pc, QubitCount n);

// Traces every basis state through the CNOT chain and returns the first input
// whose target bit disagrees with the masked parity, if any.
std::optional<OutcomeLabel> find_parity_counterexample(const ParityCircuit& p);

bool verify_parity_circuit(const ParityCircuit& p);

// Ancilla/Toffoli layout realizing a quantum condition on an n-qubit working
// register: n ancillas prepared in the condition's amplitudes, one target
// initialized to |0>, and one CCNOT(ancilla_i, working_i -> target) per
// position.
struct RealizationPlan {
    QubitCount working_n;
    int target;  // joint index 2n+1; working 1..n, ancillas n+1..2n
    Circuit circuit;
    QConditionVector ancilla_condition;
};

RealizationPlan plan_realization(const QConditionVector& phi);

struct RealizationOutcome {
    double probability;
    StateVector joint;  // post-measurement state of working + ancilla + target
};

// Builds the (2n+1)-qubit joint state working (x) ancilla (x) |0>, applies the
// plan's CCNOTs, and projects the target qubit onto target_outcome.
RealizationOutcome simulate_realization(const StateVector& working, const RealizationPlan& plan,
                                        int target_outcome);

// The event of amplitude indices a gate may modify: the control half-set for
// CU/CNOT, the conjunction of both control conditions for CCNOT, and the full
// space (a paired CU over q=0 / q=1) for a 1-qubit unitary.
struct GateSupport {
    Gate gate;
    Event support;
    bool full_pair;  // true for 1-qubit unitaries
};

GateSupport gate_support(const Gate& g, QubitCount n);

// Per-gate half-set condition texts, in circuit order.
std::vector<std::pair<Gate, std::string>> circuit_condition_trace(const Circuit& c);

}  // namespace qcs
