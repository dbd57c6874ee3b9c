#include <algorithm>
#include <set>

#include "doctest.h"
#include "qcs/condition_core.hpp"
#include "qcs/rng.hpp"
#include "test_util.hpp"

using namespace qcs;
using namespace qcs::testing;

namespace {

OutcomeLabel outcome(const std::string& s) { return OutcomeLabel::from_string(s); }
ConditionLabel cond(const std::string& s) { return ConditionLabel::from_string(s); }

ConditionExpr leaf(const std::string& mask, int rhs) {
    return ConditionExpr::leaf(ParityCondition(cond(mask), rhs));
}

// Random expression tree over n qubits, depth-bounded.
ConditionExpr random_expr(SeededRng& rng, QubitCount n, int depth) {
    const std::uint32_t dim = static_cast<std::uint32_t>(n.dimension());
    if (depth == 0 || rng.next_unit() < 0.3) {
        const auto mask = static_cast<std::uint32_t>(rng.next_u64() % dim);
        const int rhs = static_cast<int>(rng.next_u64() & 1);
        return ConditionExpr::leaf(ParityCondition(ConditionLabel(n, mask), rhs));
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

TEST_CASE("pairing matches the worked examples and the definition oracle") {
    CHECK(pairing(outcome("001"), cond("110")) == 0);
    CHECK(pairing(outcome("101"), cond("011")) == 1);
    for (std::uint32_t f = 0; f < 8; ++f) {
        CHECK(pairing(outcome("000"), ConditionLabel(QubitCount(3), f)) == 0);
    }
    // Exhaustive against the bit-sum oracle for all 3-bit pairs.
    for (std::uint32_t v = 0; v < 8; ++v) {
        for (std::uint32_t f = 0; f < 8; ++f) {
            const OutcomeLabel vl(QubitCount(3), v);
            const ConditionLabel fl(QubitCount(3), f);
            CHECK(pairing(vl, fl) == pairing_oracle(vl, fl));
        }
    }
    CHECK_THROWS_AS(pairing(outcome("01"), cond("011")), std::invalid_argument);
}

TEST_CASE("label addition is bitwise XOR") {
    CHECK((outcome("100") ^ outcome("010")) == outcome("110"));
    CHECK((outcome("101") ^ outcome("011")) == outcome("110"));
    for (std::uint32_t x = 0; x < 8; ++x) {
        const OutcomeLabel l(QubitCount(3), x);
        CHECK((l ^ l) == outcome("000"));
    }
    CHECK_THROWS_AS(outcome("10") ^ outcome("100"), std::invalid_argument);
}

TEST_CASE("pairing is bilinear, exhaustively for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const QubitCount qc(n);
        const std::uint32_t dim = static_cast<std::uint32_t>(qc.dimension());
        for (std::uint32_t v1 = 0; v1 < dim; ++v1) {
            for (std::uint32_t v2 = 0; v2 < dim; ++v2) {
                for (std::uint32_t f = 0; f < dim; ++f) {
                    const ConditionLabel fl(qc, f);
                    const int lhs = pairing(OutcomeLabel(qc, v1 ^ v2), fl);
                    const int rhs = pairing(OutcomeLabel(qc, v1), fl) ^
                                    pairing(OutcomeLabel(qc, v2), fl);
                    if (lhs != rhs) {
                        FAIL("bilinearity violated at n=", n, " v1=", v1, " v2=", v2, " f=", f);
                    }
                }
            }
        }
    }
}

TEST_CASE("dual correspondence is the bit-identical bijection") {
    CHECK(dual_correspondence(outcome("001")) == cond("001"));
    CHECK(condition_to_text(dual_correspondence(outcome("001")), 0) == "q3=0");
    CHECK(condition_to_text(dual_correspondence(outcome("000")), 0) == "0=0");
    CHECK(condition_to_text(dual_correspondence(outcome("110")), 0) == "q1⊕q2=0");
    for (int n = 1; n <= 6; ++n) {
        const QubitCount qc(n);
        for (std::uint32_t v = 0; v < qc.dimension(); ++v) {
            const OutcomeLabel vl(qc, v);
            CHECK(dual_correspondence(dual_correspondence(vl)) == vl);
        }
    }
}

TEST_CASE("annihilator matches the 3-qubit worked sets") {
    CHECK(label_bits(annihilator(outcome("001"))) ==
          std::set<std::uint32_t>{0b000, 0b100, 0b010, 0b110});
    CHECK(annihilator(outcome("000")).size() == 8);
    CHECK(label_bits(annihilator(outcome("111"))) ==
          std::set<std::uint32_t>{0b000, 0b110, 0b101, 0b011});
}

TEST_CASE("annihilator is a subgroup containing zero, exhaustively for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const QubitCount qc(n);
        const std::uint32_t dim = static_cast<std::uint32_t>(qc.dimension());
        for (std::uint32_t v = 0; v < dim; ++v) {
            const auto ann = annihilator(OutcomeLabel(qc, v));
            CHECK(ann.size() == (v == 0 ? dim : dim / 2));
            std::vector<char> member(dim, 0);
            for (const auto& f : ann) {
                member[f.bits()] = 1;
            }
            REQUIRE(member[0] == 1);
            for (const auto& f1 : ann) {
                for (const auto& f2 : ann) {
                    if (!member[f1.bits() ^ f2.bits()]) {
                        FAIL("annihilator not closed at n=", n, " v=", v);
                    }
                }
            }
        }
    }
}

TEST_CASE("duality is mutual: f annihilates v iff v satisfies f (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        const QubitCount qc(n);
        const std::uint32_t dim = static_cast<std::uint32_t>(qc.dimension());
        for (std::uint32_t v = 0; v < dim; ++v) {
            const auto ann = label_bits(annihilator(OutcomeLabel(qc, v)));
            for (std::uint32_t f = 0; f < dim; ++f) {
                const bool in_ann = ann.count(f) > 0;
                const bool satisfied = satisfying_set(ConditionLabel(qc, f)).test(v);
                CHECK(in_ann == satisfied);
            }
        }
    }
}

TEST_CASE("satisfying_set matches the worked examples") {
    CHECK(event_bits(satisfying_set(cond("001"))) ==
          std::set<std::uint32_t>{0b100, 0b010, 0b110, 0b000});
    CHECK(satisfying_set(cond("000")).count() == 8);
    CHECK(event_bits(satisfying_set(cond("111"))) ==
          std::set<std::uint32_t>{0b000, 0b011, 0b101, 0b110});
}

TEST_CASE("every nonzero condition cuts the space exactly in half (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        const QubitCount qc(n);
        for (std::uint32_t f = 1; f < qc.dimension(); ++f) {
            CHECK(satisfying_set(ConditionLabel(qc, f)).count() == qc.dimension() / 2);
        }
    }
}

TEST_CASE("condition_to_text renders masks and the degenerate forms") {
    CHECK(condition_to_text(cond("10110"), 0) == "q1⊕q3⊕q4=0");
    CHECK(condition_to_text(cond("00000"), 0) == "0=0");
    CHECK(condition_to_text(cond("101"), 1) == "q1⊕q3=1");
}

TEST_CASE("parity_event honors the right-hand side") {
    CHECK(event_bits(parity_event(ParityCondition(cond("100"), 0))) ==
          std::set<std::uint32_t>{0, 1, 2, 3});
    CHECK(parity_event(ParityCondition(cond("000"), 1)).count() == 0);
    CHECK(event_bits(parity_event(ParityCondition(cond("110"), 0))) ==
          std::set<std::uint32_t>{0b000, 0b001, 0b110, 0b111});
    // rhs=1 complements the satisfying set.
    for (std::uint32_t f = 0; f < 8; ++f) {
        const ConditionLabel fl(QubitCount(3), f);
        CHECK(parity_event(ParityCondition(fl, 1)) == ~satisfying_set(fl));
    }
}

TEST_CASE("eval_expr implements the Boolean event algebra") {
    const auto conj = ConditionExpr::conjunction(
        ConditionExpr::conjunction(leaf("100", 1), leaf("010", 0)), leaf("001", 1));
    CHECK(event_bits(eval_expr(conj)) == std::set<std::uint32_t>{0b101});

    CHECK(eval_expr(ConditionExpr::negation(leaf("000", 0))).count() == 0);

    const auto disj = ConditionExpr::disjunction(leaf("10", 0), leaf("01", 0));
    CHECK(event_bits(eval_expr(disj)) == std::set<std::uint32_t>{0b00, 0b01, 0b10});

    CHECK_THROWS_AS(ConditionExpr::conjunction(leaf("10", 0), leaf("100", 0)),
                    std::invalid_argument);
}

TEST_CASE("single_outcome_expr pins exactly its outcome") {
    const auto e = single_outcome_expr(outcome("101"));
    CHECK(event_bits(eval_expr(e)) == std::set<std::uint32_t>{0b101});
    CHECK(expr_op_count(e) == 2);
    // Structure: conjunction of single-qubit conditions with rhs = the bit.
    CHECK(e.kind() == ConditionExpr::Kind::And);
    CHECK(e.right().condition() == ParityCondition(cond("001"), 1));

    CHECK(event_bits(eval_expr(single_outcome_expr(outcome("000")))) ==
          std::set<std::uint32_t>{0});
    CHECK(event_bits(eval_expr(single_outcome_expr(outcome("10")))) ==
          std::set<std::uint32_t>{0b10});

    for (int n = 1; n <= 8; ++n) {
        const QubitCount qc(n);
        for (std::uint32_t v = 0; v < qc.dimension(); ++v) {
            const Event ev = eval_expr(single_outcome_expr(OutcomeLabel(qc, v)));
            CHECK(ev.count() == 1);
            CHECK(ev.test(v));
        }
    }
}

TEST_CASE("expr_op_count counts operator nodes only") {
    CHECK(expr_op_count(leaf("100", 0)) == 0);
    CHECK(expr_op_count(ConditionExpr::negation(
              ConditionExpr::conjunction(leaf("100", 0), leaf("010", 0)))) == 2);
}

TEST_CASE("De Morgan holds on randomized expression trees") {
    SeededRng rng(0x5eedULL);
    for (int trial = 0; trial < 200; ++trial) {
        const QubitCount n(1 + static_cast<int>(rng.next_u64() % 5));
        const auto a = random_expr(rng, n, 3);
        const auto b = random_expr(rng, n, 3);
        const auto lhs = eval_expr(
            ConditionExpr::negation(ConditionExpr::conjunction(a, b)));
        const auto rhs = eval_expr(ConditionExpr::disjunction(
            ConditionExpr::negation(a), ConditionExpr::negation(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("events behave as sets over words, including the tail word") {
    const QubitCount n(3);
    Event e = make_event(n, {1, 5, 7});
    CHECK(e.count() == 3);
    CHECK((~e).count() == 5);
    CHECK(((~e) | e) == Event::full(n));
    CHECK(((~e) & e) == Event::none(n));
    CHECK_THROWS_AS(e & Event::full(QubitCount(4)), std::invalid_argument);

    // n = 7 spans two words.
    const QubitCount big(7);
    Event f = make_event(big, {0, 63, 64, 127});
    CHECK(f.count() == 4);
    CHECK((~f).count() == 124);
}

TEST_CASE("labels validate their construction") {
    CHECK_THROWS_AS(OutcomeLabel(QubitCount(2), 4), std::invalid_argument);
    CHECK_THROWS_AS(OutcomeLabel::from_string("01x"), std::invalid_argument);
    CHECK_THROWS_AS(QubitCount(0), std::invalid_argument);
    CHECK_THROWS_AS(QubitCount(25), std::invalid_argument);
    CHECK_THROWS_AS(ParityCondition(cond("10"), 2), std::invalid_argument);
    CHECK(outcome("011").bits() == 3);
    CHECK(outcome("011").to_string() == "011");
    CHECK(outcome("011").bit(1) == 0);
    CHECK(outcome("011").bit(3) == 1);
}
