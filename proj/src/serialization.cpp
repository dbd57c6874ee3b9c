#include "qcs/serialization.hpp"

namespace qcs {

namespace {

json amplitudes_to_json(std::span<const Amplitude> amps) {
    json arr = json::array();
    for (const Amplitude& a : amps) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr;
}

std::vector<Amplitude> amplitudes_from_json(const json& arr) {
    if (!arr.is_array()) {
        throw std::invalid_argument("\"amplitudes\" must be an array of [re, im] pairs");
    }
    std::vector<Amplitude> amps;
    amps.reserve(arr.size());
    for (const json& entry : arr) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument("amplitude entries must be [re, im] pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return amps;
}

json mat2_to_json(const Mat2& m) {
    json arr = json::array();
    for (const Amplitude& a : m.m) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr;
}

Mat2 mat2_from_json(const json& arr) {
    if (!arr.is_array() || arr.size() != 4) {
        throw std::invalid_argument("\"u\" must hold four [re, im] pairs (row-major)");
    }
    Mat2 m;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!arr[i].is_array() || arr[i].size() != 2) {
            throw std::invalid_argument("\"u\" entries must be [re, im] pairs");
        }
        m.m[i] = Amplitude(arr[i][0].get<double>(), arr[i][1].get<double>());
    }
    return m;
}

}  // namespace

json state_to_json(const StateVector& s) {
    return json{{"n", s.qubits().value}, {"amplitudes", amplitudes_to_json(s.amplitudes())}};
}

StateVector state_from_json(const json& j) {
    const QubitCount n(j.at("n").get<int>());
    return StateVector(n, amplitudes_from_json(j.at("amplitudes")));
}

json qcondition_to_json(const QConditionVector& phi) {
    return json{{"n", phi.positions().value},
                {"space", "condition"},
                {"amplitudes", amplitudes_to_json(phi.amplitudes())}};
}

QConditionVector qcondition_from_json(const json& j) {
    if (!is_condition_space(j)) {
        throw std::invalid_argument("expected a condition-space vector (\"space\": \"condition\")");
    }
    const QubitCount m(j.at("n").get<int>());
    return QConditionVector(m, amplitudes_from_json(j.at("amplitudes")));
}

bool is_condition_space(const json& j) {
    return j.is_object() && j.contains("space") && j["space"] == "condition";
}

json gate_to_json(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::U:
            return json{{"kind", "U"}, {"target", g.target}, {"u", mat2_to_json(g.matrix)}};
        case Gate::Kind::CU:
            return json{{"kind", "CU"},
                        {"control", g.control},
                        {"cv", g.control_value},
                        {"target", g.target},
                        {"u", mat2_to_json(g.matrix)}};
        case Gate::Kind::CNOT:
            return json{{"kind", "CNOT"}, {"control", g.control}, {"target", g.target}};
        case Gate::Kind::CCNOT:
            return json{{"kind", "CCNOT"},
                        {"control1", g.control},
                        {"control2", g.control2},
                        {"target", g.target}};
    }
    throw std::logic_error("unreachable gate kind");
}

Gate gate_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "U") {
        return Gate::single(j.at("target").get<int>(), mat2_from_json(j.at("u")));
    }
    if (kind == "CU") {
        return Gate::controlled(j.at("control").get<int>(), j.at("cv").get<int>(),
                                j.at("target").get<int>(), mat2_from_json(j.at("u")));
    }
    if (kind == "CNOT") {
        return Gate::cnot(j.at("control").get<int>(), j.at("target").get<int>());
    }
    if (kind == "CCNOT") {
        return Gate::ccnot(j.at("control1").get<int>(), j.at("control2").get<int>(),
                           j.at("target").get<int>());
    }
    throw std::invalid_argument("unknown gate kind \"" + kind + "\"");
}

json circuit_to_json(const Circuit& c) {
    json gates = json::array();
    for (const Gate& g : c.gates) {
        gates.push_back(gate_to_json(g));
    }
    return json{{"n", c.n.value}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
    const QubitCount n(j.at("n").get<int>());
    Circuit c(n);
    for (const json& g : j.at("gates")) {
        c.append(gate_from_json(g));
    }
    return c;
}

json parity_circuit_to_json(const ParityCircuit& p) {
    json out = circuit_to_json(p.circuit);
    out["target"] = p.target;
    out["condition"] = condition_to_text(p.condition.mask, p.condition.rhs);
    return out;
}

json realization_plan_to_json(const RealizationPlan& plan) {
    json out = circuit_to_json(plan.circuit);
    out["working_n"] = plan.working_n.value;
    out["target"] = plan.target;
    out["ancilla_condition"] = qcondition_to_json(plan.ancilla_condition);
    return out;
}

}  // namespace qcs
