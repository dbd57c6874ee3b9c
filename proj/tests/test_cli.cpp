#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "doctest.h"
#include "qcs/duality_transform.hpp"
#include "qcs/serialization.hpp"
#include "test_util.hpp"

using namespace qcs;
using namespace qcs::testing;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QCS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "qcs_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_bell_file() {
    const double s = 1.0 / std::numbers::sqrt2;
    const StateVector bell(QubitCount(2), {Amplitude{s}, Amplitude{0}, Amplitude{0}, Amplitude{s}});
    const auto path = temp_dir() / "bell.json";
    std::ofstream out(path);
    out << state_to_json(bell).dump(2);
    return path.string();
}

}  // namespace

TEST_CASE("dual lists the worked annihilator with texts") {
    const auto r = run_cli("dual --n 3 --outcome 001");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("condition").at("text") == "q3=0");
    std::set<std::string> labels;
    for (const auto& entry : j.at("annihilator")) {
        labels.insert(entry.at("label").get<std::string>());
    }
    CHECK(labels == std::set<std::string>{"000", "100", "010", "110"});
}

TEST_CASE("compile emits the CNOT chain for the 5-qubit example") {
    const auto r = run_cli("compile --n 5 --condition \"q2^q3^q5=0\"");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("target") == 5);
    REQUIRE(j.at("gates").size() == 2);
    CHECK(j["gates"][0].at("kind") == "CNOT");
    CHECK(j["gates"][0].at("control") == 2);
    CHECK(j["gates"][0].at("target") == 3);
    CHECK(j["gates"][1].at("control") == 3);
    CHECK(j["gates"][1].at("target") == 5);
}

TEST_CASE("estimate is a thin adapter over the sampling module") {
    const auto bell_path = write_bell_file();
    const auto r = run_cli("estimate --state " + bell_path +
                           " --condition \"q1=0\" --shots 1 --seed 7");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    const double p = j.at("p_hat").get<double>();
    CHECK((p == 0.0 || p == 1.0));

    // Byte-identical on repeated runs, and equal to the direct module call.
    const auto a = run_cli("estimate --state " + bell_path +
                           " --condition \"q1=0\" --shots 2000 --seed 11");
    const auto b = run_cli("estimate --state " + bell_path +
                           " --condition \"q1=0\" --shots 2000 --seed 11");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const double s = 1.0 / std::numbers::sqrt2;
    const StateVector bell(QubitCount(2), {Amplitude{s}, Amplitude{0}, Amplitude{0}, Amplitude{s}});
    const auto direct =
        sample_event(bell, satisfying_set(ConditionLabel::from_string("10")), 2000, 11);
    CHECK(json::parse(a.output).at("p_hat").get<double>() == direct.p_hat);
}

TEST_CASE("project and entropy equal the direct module calls") {
    const auto bell_path = write_bell_file();
    const double s = 1.0 / std::numbers::sqrt2;
    const StateVector bell(QubitCount(2), {Amplitude{s}, Amplitude{0}, Amplitude{0}, Amplitude{s}});

    const auto proj = run_cli("project --state " + bell_path + " --condition \"q1=0\"");
    REQUIRE(proj.exit_code == 0);
    const auto direct = project(bell, satisfying_set(ConditionLabel::from_string("10")));
    const json pj = json::parse(proj.output);
    CHECK(pj.at("probability").get<double>() == direct.probability);
    CHECK(pj.at("state").at("amplitudes")[0][0].get<double>() == direct.state[0].real());

    const auto ent = run_cli("entropy --state " + bell_path + " --base 2");
    REQUIRE(ent.exit_code == 0);
    const auto pair = uncertainty_sum(bell, LogBase::two);
    const json ej = json::parse(ent.output);
    CHECK(ej.at("state_entropy").get<double>() == pair.state_entropy);
    CHECK(ej.at("condition_entropy").get<double>() == pair.condition_entropy);
    CHECK(ej.at("base") == "2");
}

TEST_CASE("transform round-trips a state through the condition space") {
    const auto bell_path = write_bell_file();
    const auto forward = run_cli("transform --state " + bell_path);
    REQUIRE(forward.exit_code == 0);
    const json cond = json::parse(forward.output);
    CHECK(cond.at("space") == "condition");

    const auto cond_path = (temp_dir() / "bell_condition.json").string();
    {
        std::ofstream out(cond_path);
        out << cond.dump(2);
    }
    const auto back = run_cli("transform --state " + cond_path);
    REQUIRE(back.exit_code == 0);
    const auto restored = state_from_json(json::parse(back.output));
    const double s = 1.0 / std::numbers::sqrt2;
    CHECK(close(restored[0], Amplitude{s}, 1e-12));
    CHECK(close(restored[3], Amplitude{s}, 1e-12));
}

TEST_CASE("scan emits the declared CSV header and is deterministic") {
    const auto a = run_cli("scan --n 2 --samples 25 --seed 13");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output.rfind("sample_index,H_S,H_C,sum,seed\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : a.output) {
        if (ch == '\n') {
            ++lines;
        }
    }
    CHECK(lines == 26);  // header + 25 rows
    const auto b = run_cli("scan --n 2 --samples 25 --seed 13");
    CHECK(a.output == b.output);
}

TEST_CASE("realize reports the plan and the projected branch") {
    const auto bell_path = write_bell_file();
    const auto phi = qcond_basis(QubitCount(2), ConditionLabel::from_string("10"));
    const auto phi_path = (temp_dir() / "q1zero.json").string();
    {
        std::ofstream out(phi_path);
        out << qcondition_to_json(phi).dump(2);
    }
    const auto r = run_cli("realize --qcond " + phi_path + " --state " + bell_path);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("plan").at("target") == 5);
    CHECK(j.at("plan").at("gates").size() == 2);
    CHECK(close(j.at("probability").get<double>(), 0.5, 1e-12));
}

TEST_CASE("trace renders the per-gate conditions") {
    Circuit c(QubitCount(2));
    c.append(Gate::cnot(1, 2));
    c.append(Gate::controlled(2, 1, 1, Mat2::hadamard()));
    const auto path = (temp_dir() / "trace_in.json").string();
    {
        std::ofstream out(path);
        out << circuit_to_json(c).dump(2);
    }
    const auto r = run_cli("trace --circuit " + path);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    REQUIRE(j.at("trace").size() == 2);
    CHECK(j["trace"][0].at("condition") == "q1=1");
    CHECK(j["trace"][1].at("condition") == "q2=1");
}

TEST_CASE("exit codes distinguish parse, domain, and I/O failures") {
    const auto bell_path = write_bell_file();
    CHECK(run_cli("event --n 3 --condition \"q9=0\"").exit_code == 2);
    CHECK(run_cli("project --state " + bell_path + " --condition \"0=1\"").exit_code == 3);
    CHECK(run_cli("estimate --state /nonexistent.json --condition \"q1=0\" --shots 1 --seed 1")
              .exit_code == 4);
    CHECK(run_cli("estimate --state " + bell_path + " --condition \"q1=0\" --shots 0 --seed 1")
              .exit_code == 2);
}
