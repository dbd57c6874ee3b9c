#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcs/condition_compiler.hpp"
#include "qcs/condition_core.hpp"
#include "qcs/condition_parser.hpp"
#include "qcs/duality_transform.hpp"
#include "qcs/qcondition.hpp"
#include "qcs/serialization.hpp"
#include "qcs/statevector.hpp"

namespace {

using qcs::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open input file: " + path);
    }
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw IoError("cannot open output file: " + out_path);
    }
    out << text;
    if (!out) {
        throw IoError("failed writing output file: " + out_path);
    }
}

void emit_json(const json& j, const std::string& out_path) {
    write_output(j.dump(2) + "\n", out_path);
}

std::string label_entry_text(const qcs::ConditionLabel& f) {
    return qcs::condition_to_text(f, 0);
}

qcs::LogBase parse_base(const std::string& base) {
    return base == "2" ? qcs::LogBase::two : qcs::LogBase::natural;
}

std::string base_name(qcs::LogBase base) {
    return base == qcs::LogBase::two ? "2" : "e";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    int n = 0;
    std::string outcome;
    std::string condition;
    std::string state_path;
    std::string circuit_path;
    std::string qcond_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::int64_t shots = 0;
    std::int64_t samples = 0;
    std::string base = "e";
    int target_outcome = 0;
    bool as_json = false;
    bool as_csv = false;
};

int run_dual(const Options& opt) {
    const qcs::QubitCount n(opt.n);
    const auto v = qcs::OutcomeLabel::from_string(opt.outcome);
    if (v.qubits() != n) {
        throw std::invalid_argument("--outcome length must equal --n");
    }
    const auto f = qcs::dual_correspondence(v);
    json ann = json::array();
    for (const auto& g : qcs::annihilator(v)) {
        ann.push_back({{"label", g.to_string()}, {"text", label_entry_text(g)}});
    }
    emit_json(json{{"n", n.value},
                   {"outcome", v.to_string()},
                   {"condition", {{"label", f.to_string()}, {"text", label_entry_text(f)}}},
                   {"annihilator", ann}},
              opt.out_path);
    return 0;
}

int run_event(const Options& opt) {
    const qcs::QubitCount n(opt.n);
    const auto expr = qcs::parse_condition_expr(opt.condition, n);
    const auto event = qcs::eval_expr(expr);
    json members = json::array();
    for (const auto& m : event.members()) {
        members.push_back(m.to_string());
    }
    emit_json(json{{"n", n.value},
                   {"condition", qcs::to_grammar_text(expr)},
                   {"count", event.count()},
                   {"members", members}},
              opt.out_path);
    return 0;
}

int run_simulate(const Options& opt) {
    const auto state = qcs::state_from_json(read_json_file(opt.state_path));
    const auto circuit = qcs::circuit_from_json(read_json_file(opt.circuit_path));
    emit_json(qcs::state_to_json(qcs::apply_circuit(state, circuit)), opt.out_path);
    return 0;
}

qcs::Event event_for_state(const qcs::StateVector& state, const std::string& condition) {
    const auto expr = qcs::parse_condition_expr(condition, state.qubits());
    return qcs::eval_expr(expr);
}

int run_project(const Options& opt) {
    const auto state = qcs::state_from_json(read_json_file(opt.state_path));
    const auto proj = qcs::project(state, event_for_state(state, opt.condition));
    emit_json(json{{"probability", proj.probability}, {"state", qcs::state_to_json(proj.state)}},
              opt.out_path);
    return 0;
}

int run_estimate(const Options& opt) {
    const auto state = qcs::state_from_json(read_json_file(opt.state_path));
    const auto est =
        qcs::sample_event(state, event_for_state(state, opt.condition), opt.shots, opt.seed);
    emit_json(json{{"p_hat", est.p_hat},
                   {"shots", est.shots},
                   {"sigma_mean_est", est.sigma_mean_est},
                   {"seed", est.seed}},
              opt.out_path);
    return 0;
}

int run_transform(const Options& opt) {
    const json j = read_json_file(opt.state_path);
    if (qcs::is_condition_space(j)) {
        emit_json(qcs::state_to_json(qcs::condition_to_state(qcs::qcondition_from_json(j))),
                  opt.out_path);
    } else {
        emit_json(qcs::qcondition_to_json(qcs::state_to_condition(qcs::state_from_json(j))),
                  opt.out_path);
    }
    return 0;
}

int run_entropy(const Options& opt) {
    const auto state = qcs::state_from_json(read_json_file(opt.state_path));
    const auto pair = qcs::uncertainty_sum(state, parse_base(opt.base));
    emit_json(json{{"state_entropy", pair.state_entropy},
                   {"condition_entropy", pair.condition_entropy},
                   {"sum", pair.sum()},
                   {"base", base_name(pair.base)}},
              opt.out_path);
    return 0;
}

int run_scan(const Options& opt) {
    const qcs::QubitCount n(opt.n);
    const auto result = qcs::min_uncertainty_scan(n, opt.samples, opt.seed, parse_base(opt.base));
    if (opt.as_json) {
        json rows = json::array();
        for (const auto& row : result.rows) {
            rows.push_back({{"sample_index", row.index},
                            {"H_S", row.state_entropy},
                            {"H_C", row.condition_entropy},
                            {"sum", row.sum()},
                            {"seed", row.seed}});
        }
        emit_json(json{{"n", n.value},
                       {"base", base_name(result.base)},
                       {"min_sum", result.min_sum},
                       {"argmin_index", result.argmin_index},
                       {"histogram", result.histogram},
                       {"histogram_bin_width", result.histogram_bin_width},
                       {"rows", rows}},
                  opt.out_path);
        return 0;
    }
    std::string csv = "sample_index,H_S,H_C,sum,seed\n";
    for (const auto& row : result.rows) {
        csv += std::to_string(row.index);
        csv += ',';
        csv += format_double(row.state_entropy);
        csv += ',';
        csv += format_double(row.condition_entropy);
        csv += ',';
        csv += format_double(row.sum());
        csv += ',';
        csv += std::to_string(row.seed);
        csv += '\n';
    }
    write_output(csv, opt.out_path);
    return 0;
}

int run_compile(const Options& opt) {
    const qcs::QubitCount n(opt.n);
    const auto expr = qcs::parse_condition_expr(opt.condition, n);
    if (expr.kind() != qcs::ConditionExpr::Kind::Leaf) {
        throw std::invalid_argument("compile expects a single parity condition, not a compound expression");
    }
    const auto compiled = qcs::compile_parity(expr.condition(), n);
    emit_json(qcs::parity_circuit_to_json(compiled), opt.out_path);
    return 0;
}

int run_realize(const Options& opt) {
    const auto phi = qcs::qcondition_from_json(read_json_file(opt.qcond_path));
    const auto plan = qcs::plan_realization(phi);
    json out{{"plan", qcs::realization_plan_to_json(plan)}};
    if (!opt.state_path.empty()) {
        const auto working = qcs::state_from_json(read_json_file(opt.state_path));
        const auto realized = qcs::simulate_realization(working, plan, opt.target_outcome);
        out["target_outcome"] = opt.target_outcome;
        out["probability"] = realized.probability;
        out["post_state"] = qcs::state_to_json(realized.joint);
    }
    emit_json(out, opt.out_path);
    return 0;
}

int run_trace(const Options& opt) {
    const auto circuit = qcs::circuit_from_json(read_json_file(opt.circuit_path));
    json entries = json::array();
    for (const auto& [gate, text] : qcs::circuit_condition_trace(circuit)) {
        entries.push_back({{"gate", qcs::gate_to_json(gate)}, {"condition", text}});
    }
    emit_json(json{{"n", circuit.n.value}, {"trace", entries}}, opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum condition space toolkit"};
    app.require_subcommand(1);

    Options opt;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out_path, "output file (default: stdout)"); };
    auto add_base = [&](CLI::App* cmd) {
        cmd->add_option("--base", opt.base, "entropy log base")->check(CLI::IsMember({"e", "2"}));
    };

    auto* dual = app.add_subcommand("dual", "dual condition and annihilator of an outcome");
    dual->add_option("--n", opt.n, "qubit count")->required();
    dual->add_option("--outcome", opt.outcome, "outcome bits, q1 first")->required();
    add_out(dual);

    auto* event = app.add_subcommand("event", "evaluate a condition expression to an event");
    event->add_option("--n", opt.n, "qubit count")->required();
    event->add_option("--condition", opt.condition, "condition expression")->required();
    add_out(event);

    auto* simulate = app.add_subcommand("simulate", "apply a circuit file to a state file");
    simulate->add_option("--state", opt.state_path, "state JSON file")->required();
    simulate->add_option("--circuit", opt.circuit_path, "circuit JSON file")->required();
    add_out(simulate);

    auto* project_cmd = app.add_subcommand("project", "project a state onto a condition's event");
    project_cmd->add_option("--state", opt.state_path, "state JSON file")->required();
    project_cmd->add_option("--condition", opt.condition, "condition expression")->required();
    add_out(project_cmd);

    auto* estimate = app.add_subcommand("estimate", "sampled event-probability estimate");
    estimate->add_option("--state", opt.state_path, "state JSON file")->required();
    estimate->add_option("--condition", opt.condition, "condition expression")->required();
    estimate->add_option("--shots", opt.shots, "number of measurements")->required();
    estimate->add_option("--seed", opt.seed, "generator seed")->required();
    add_out(estimate);

    auto* transform = app.add_subcommand("transform", "map between state and condition space");
    transform->add_option("--state", opt.state_path, "state or condition JSON file")->required();
    add_out(transform);

    auto* entropy_cmd = app.add_subcommand("entropy", "entropy pair of a state and its transform");
    entropy_cmd->add_option("--state", opt.state_path, "state JSON file")->required();
    add_base(entropy_cmd);
    add_out(entropy_cmd);

    auto* scan = app.add_subcommand("scan", "random-state scan of the entropy sum");
    scan->add_option("--n", opt.n, "qubit count")->required();
    scan->add_option("--samples", opt.samples, "number of random states")->required();
    scan->add_option("--seed", opt.seed, "generator seed")->required();
    add_base(scan);
    scan->add_flag("--json", opt.as_json, "emit JSON instead of CSV");
    scan->add_flag("--csv", opt.as_csv, "emit CSV (default)");
    add_out(scan);

    auto* compile = app.add_subcommand("compile", "compile a parity condition to a CNOT chain");
    compile->add_option("--n", opt.n, "qubit count")->required();
    compile->add_option("--condition", opt.condition, "single parity condition")->required();
    add_out(compile);

    auto* realize = app.add_subcommand("realize", "ancilla/Toffoli realization of a quantum condition");
    realize->add_option("--qcond", opt.qcond_path, "condition-space JSON file")->required();
    realize->add_option("--state", opt.state_path, "working-register state JSON file");
    realize->add_option("--outcome", opt.target_outcome, "target measurement outcome")
        ->check(CLI::IsMember({0, 1}));
    add_out(realize);

    auto* trace = app.add_subcommand("trace", "per-gate half-set condition trace of a circuit");
    trace->add_option("--circuit", opt.circuit_path, "circuit JSON file")->required();
    add_out(trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(dual)) return run_dual(opt);
        if (app.got_subcommand(event)) return run_event(opt);
        if (app.got_subcommand(simulate)) return run_simulate(opt);
        if (app.got_subcommand(project_cmd)) return run_project(opt);
        if (app.got_subcommand(estimate)) return run_estimate(opt);
        if (app.got_subcommand(transform)) return run_transform(opt);
        if (app.got_subcommand(entropy_cmd)) return run_entropy(opt);
        if (app.got_subcommand(scan)) return run_scan(opt);
        if (app.got_subcommand(compile)) return run_compile(opt);
        if (app.got_subcommand(realize)) return run_realize(opt);
        if (app.got_subcommand(trace)) return run_trace(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qcs::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
