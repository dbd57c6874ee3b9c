#include "doctest.h"
#include "qcs/condition_parser.hpp"
#include "qcs/duality_transform.hpp"
#include "qcs/rng.hpp"
#include "qcs/serialization.hpp"
#include "test_util.hpp"

using namespace qcs;
using namespace qcs::testing;

namespace {

ConditionExpr random_expr(SeededRng& rng, QubitCount n, int depth) {
    const std::uint32_t dim = static_cast<std::uint32_t>(n.dimension());
    if (depth == 0 || rng.next_unit() < 0.3) {
        const auto mask = static_cast<std::uint32_t>(rng.next_u64() % dim);
        return ConditionExpr::leaf(
            ParityCondition(ConditionLabel(n, mask), static_cast<int>(rng.next_u64() & 1)));
    }
    switch (rng.next_u64() % 3) {
        case 0:
            return ConditionExpr::conjunction(random_expr(rng, n, depth - 1),
                                              random_expr(rng, n, depth - 1));
        case 1:
            return ConditionExpr::disjunction(random_expr(rng, n, depth - 1),
                                              random_expr(rng, n, depth - 1));
        default:
            return ConditionExpr::negation(random_expr(rng, n, depth - 1));
    }
}

}  // namespace

TEST_CASE("the grammar covers atoms, combinators, and parentheses") {
    const QubitCount n3(3);
    const auto atom = parse_condition_expr("q1^q2=0", n3);
    CHECK(atom.kind() == ConditionExpr::Kind::Leaf);
    CHECK(atom.condition() == ParityCondition(ConditionLabel::from_string("110"), 0));

    const auto negated = parse_condition_expr("NOT (q1=0)", n3);
    CHECK(negated.kind() == ConditionExpr::Kind::Not);
    CHECK(eval_expr(negated) ==
          parity_event(ParityCondition(ConditionLabel::from_string("100"), 1)));

    const auto conj = parse_condition_expr("(q1=1) AND (q2=0) AND (q3=1)", n3);
    CHECK(event_bits(eval_expr(conj)) == std::set<std::uint32_t>{0b101});

    // NOT binds tighter than AND, AND tighter than OR.
    const auto mixed = parse_condition_expr("q1=0 AND q2=0 OR q3=0", n3);
    CHECK(mixed.kind() == ConditionExpr::Kind::Or);
    CHECK(mixed.left().kind() == ConditionExpr::Kind::And);

    // Degenerate atoms and GF(2) cancellation.
    CHECK(eval_expr(parse_condition_expr("0=0", n3)).count() == 8);
    CHECK(eval_expr(parse_condition_expr("0=1", n3)).count() == 0);
    CHECK(parse_condition_expr("q1^q1=0", n3).condition().mask.bits() == 0);

    // Whitespace tolerance.
    const auto spaced = parse_condition_expr("  ( q1 ^ q3 = 1 )  OR NOT(q2=0)", n3);
    CHECK(spaced.kind() == ConditionExpr::Kind::Or);
}

TEST_CASE("parse errors carry positions") {
    const QubitCount n3(3);
    CHECK_THROWS_AS(parse_condition_expr("q1^", n3), parse_error);
    CHECK_THROWS_AS(parse_condition_expr("q4=0", n3), parse_error);
    CHECK_THROWS_AS(parse_condition_expr("q1=2", n3), parse_error);
    CHECK_THROWS_AS(parse_condition_expr("(q1=0", n3), parse_error);
    CHECK_THROWS_AS(parse_condition_expr("q1=0 and q2=0", n3), parse_error);
    CHECK_THROWS_AS(parse_condition_expr("", n3), parse_error);
    try {
        parse_condition_expr("q1=0 q2=0", n3);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("printing and parsing round-trip on random trees") {
    SeededRng rng(0xABCD);
    for (int trial = 0; trial < 300; ++trial) {
        const QubitCount n(1 + static_cast<int>(rng.next_u64() % 5));
        const auto tree = random_expr(rng, n, 4);
        const auto printed = to_grammar_text(tree);
        const auto reparsed = parse_condition_expr(printed, n);
        CHECK(reparsed == tree);
        CHECK(to_grammar_text(reparsed) == printed);
    }
}

TEST_CASE("state JSON round-trips and validates") {
    const auto s = random_state(QubitCount(3), 4242);
    const auto j = state_to_json(s);
    CHECK(j.at("n") == 3);
    const auto back = state_from_json(j);
    CHECK(close_all(back.amplitudes(), s.amplitudes(), 0.0));

    json bad = j;
    bad["amplitudes"].erase(0);
    CHECK_THROWS_AS(state_from_json(bad), std::invalid_argument);

    json unnormalized = j;
    unnormalized["amplitudes"][0] = {10.0, 0.0};
    CHECK_THROWS_AS(state_from_json(unnormalized), std::invalid_argument);

    CHECK_THROWS(state_from_json(json{{"n", 3}}));
}

TEST_CASE("condition-space vectors carry the space marker") {
    const auto phi = bell_condition();
    const auto j = qcondition_to_json(phi);
    CHECK(j.at("space") == "condition");
    CHECK(is_condition_space(j));
    const auto back = qcondition_from_json(j);
    CHECK(close_all(back.amplitudes(), phi.amplitudes(), 0.0));

    const auto plain = state_to_json(random_state(QubitCount(2), 7));
    CHECK_FALSE(is_condition_space(plain));
    CHECK_THROWS_AS(qcondition_from_json(plain), std::invalid_argument);
}

TEST_CASE("circuit JSON round-trips all gate kinds") {
    SeededRng rng(9);
    Circuit c(QubitCount(3));
    c.append(Gate::single(1, random_unitary(rng)));
    c.append(Gate::controlled(2, 0, 3, random_unitary(rng)));
    c.append(Gate::cnot(1, 3));
    c.append(Gate::ccnot(1, 2, 3));
    const auto j = circuit_to_json(c);
    const auto back = circuit_from_json(j);
    REQUIRE(back.gates.size() == c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i] == c.gates[i]);
    }

    CHECK_THROWS_AS(gate_from_json(json{{"kind", "SWAP"}, {"target", 1}}), std::invalid_argument);
}

TEST_CASE("compiled circuits serialize with target and condition text") {
    const QubitCount n5(5);
    const auto compiled =
        compile_parity(ParityCondition(ConditionLabel::from_string("01101"), 0), n5);
    const auto j = parity_circuit_to_json(compiled);
    CHECK(j.at("target") == 5);
    CHECK(j.at("condition") == "q2⊕q3⊕q5=0");
    // The compiled file is still a plain circuit file (extra keys ignored).
    const auto as_circuit = circuit_from_json(j);
    CHECK(as_circuit.gates.size() == 2);
}
