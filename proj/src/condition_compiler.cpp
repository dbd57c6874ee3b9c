#include "qcs/condition_compiler.hpp"

#include <bit>
#include <utility>

#include "qcs/parallel.hpp"

namespace qcs {

ParityCircuit compile_parity(const ParityCondition& pc, QubitCount n) {
    if (pc.mask.qubits() != n) {
        throw std::invalid_argument("condition mask length must equal n");
    }
    if (pc.mask.bits() == 0) {
        throw std::invalid_argument("cannot compile a zero-mask condition");
    }
    std::vector<int> chain;
    for (int qubit = 1; qubit <= n.value; ++qubit) {
        if (pc.mask.bit(qubit)) {
            chain.push_back(qubit);
        }
    }
    Circuit circuit(n);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        circuit.append(Gate::cnot(chain[k], chain[k + 1]));
    }
    return ParityCircuit{std::move(circuit), chain.back(), pc};
}

std::optional<OutcomeLabel> find_parity_counterexample(const ParityCircuit& p) {
    const QubitCount n = p.circuit.n;
    for (const Gate& g : p.circuit.gates) {
        if (g.kind != Gate::Kind::CNOT) {
            throw std::invalid_argument("parity circuit must contain only CNOT gates");
        }
    }
    const std::uint32_t mask = p.condition.mask.bits();
    const std::uint32_t target_bit = std::uint32_t{1} << (n.value - p.target);
    const std::uint32_t dim = static_cast<std::uint32_t>(n.dimension());
    for (std::uint32_t h = 0; h < dim; ++h) {
        // CNOT chains map basis states to basis states; trace the bits.
        std::uint32_t bits = h;
        for (const Gate& g : p.circuit.gates) {
            if ((bits >> (n.value - g.control)) & 1u) {
                bits ^= std::uint32_t{1} << (n.value - g.target);
            }
        }
        const int stored = (bits & target_bit) ? 1 : 0;
        const int expected = std::popcount(h & mask) & 1;
        if (stored != expected) {
            return OutcomeLabel(n, h);
        }
    }
    return std::nullopt;
}

bool verify_parity_circuit(const ParityCircuit& p) {
    return !find_parity_counterexample(p).has_value();
}

RealizationPlan plan_realization(const QConditionVector& phi) {
    const int n = phi.positions().value;
    const QubitCount joint(2 * n + 1);
    const int target = 2 * n + 1;
    Circuit circuit(joint);
    for (int i = 1; i <= n; ++i) {
        circuit.append(Gate::ccnot(n + i, i, target));
    }
    return RealizationPlan{phi.positions(), target, std::move(circuit), phi};
}

RealizationOutcome simulate_realization(const StateVector& working, const RealizationPlan& plan,
                                        int target_outcome) {
    if (working.qubits() != plan.working_n) {
        throw std::invalid_argument("working register size disagrees with the plan");
    }
    if (target_outcome != 0 && target_outcome != 1) {
        throw std::invalid_argument("target outcome must be 0 or 1");
    }
    const int n = plan.working_n.value;
    const QubitCount joint_n(2 * n + 1);
    const std::size_t working_dim = plan.working_n.dimension();
    const std::size_t ancilla_dim = working_dim;

    std::vector<Amplitude> joint(joint_n.dimension(), Amplitude{0});
    const std::int64_t pairs = static_cast<std::int64_t>(working_dim * ancilla_dim);
#pragma omp parallel for if (pairs >= detail::kOmpMinSize)
    for (std::int64_t wa = 0; wa < pairs; ++wa) {
        const std::size_t w = static_cast<std::size_t>(wa) / ancilla_dim;
        const std::size_t a = static_cast<std::size_t>(wa) % ancilla_dim;
        joint[(w << (n + 1)) | (a << 1)] = working[w] * plan.ancilla_condition[a];
    }

    const StateVector after =
        apply_circuit(StateVector(joint_n, std::move(joint)), plan.circuit);

    const ConditionLabel target_mask(joint_n, 1u);  // lowest bit = the target qubit
    const Event selected = parity_event(ParityCondition(target_mask, target_outcome));
    Projection proj = project(after, selected);
    return RealizationOutcome{proj.probability, std::move(proj.state)};
}

GateSupport gate_support(const Gate& g, QubitCount n) {
    g.check_indices(n);
    auto qubit_mask = [&](int qubit) {
        return ConditionLabel(n, std::uint32_t{1} << (n.value - qubit));
    };
    switch (g.kind) {
        case Gate::Kind::U:
            return GateSupport{g, Event::full(n), true};
        case Gate::Kind::CU:
            return GateSupport{g, parity_event(ParityCondition(qubit_mask(g.control), g.control_value)),
                               false};
        case Gate::Kind::CNOT:
            return GateSupport{g, parity_event(ParityCondition(qubit_mask(g.control), 1)), false};
        case Gate::Kind::CCNOT:
            return GateSupport{g,
                               parity_event(ParityCondition(qubit_mask(g.control), 1)) &
                                   parity_event(ParityCondition(qubit_mask(g.control2), 1)),
                               false};
    }
    throw std::logic_error("unreachable gate kind");
}

std::vector<std::pair<Gate, std::string>> circuit_condition_trace(const Circuit& c) {
    auto qubit_mask = [&](int qubit) {
        return ConditionLabel(c.n, std::uint32_t{1} << (c.n.value - qubit));
    };
    std::vector<std::pair<Gate, std::string>> trace;
    trace.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        std::string text;
        switch (g.kind) {
            case Gate::Kind::U:
                text = condition_to_text(qubit_mask(g.target), 0) + " OR " +
                       condition_to_text(qubit_mask(g.target), 1) + " (full space, paired CU)";
                break;
            case Gate::Kind::CU:
                text = condition_to_text(qubit_mask(g.control), g.control_value);
                break;
            case Gate::Kind::CNOT:
                text = condition_to_text(qubit_mask(g.control), 1);
                break;
            case Gate::Kind::CCNOT:
                text = condition_to_text(qubit_mask(g.control), 1) + " AND " +
                       condition_to_text(qubit_mask(g.control2), 1);
                break;
        }
        trace.emplace_back(g, std::move(text));
    }
    return trace;
}

}  // namespace qcs
