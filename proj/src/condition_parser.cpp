#include "qcs/condition_parser.hpp"

#include <cctype>

namespace qcs {

namespace {

class Parser {
public:
    Parser(std::string_view text, QubitCount n) : text_(text), n_(n) {}

    ConditionExpr parse() {
        ConditionExpr e = parse_or();
        skip_spaces();
        if (pos_ != text_.size()) {
            throw parse_error("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    ConditionExpr parse_or() {
        ConditionExpr e = parse_and();
        while (try_keyword("OR")) {
            e = ConditionExpr::disjunction(std::move(e), parse_and());
        }
        return e;
    }

    ConditionExpr parse_and() {
        ConditionExpr e = parse_unary();
        while (try_keyword("AND")) {
            e = ConditionExpr::conjunction(std::move(e), parse_unary());
        }
        return e;
    }

    ConditionExpr parse_unary() {
        if (try_keyword("NOT")) {
            return ConditionExpr::negation(parse_unary());
        }
        return parse_primary();
    }

    ConditionExpr parse_primary() {
        skip_spaces();
        if (peek() == '(') {
            ++pos_;
            ConditionExpr e = parse_or();
            skip_spaces();
            if (peek() != ')') {
                throw parse_error("expected ')'", pos_);
            }
            ++pos_;
            return e;
        }
        return parse_parity();
    }

    ConditionExpr parse_parity() {
        skip_spaces();
        std::uint32_t mask = 0;
        if (peek() == '0') {
            ++pos_;
        } else {
            mask ^= parse_qubit_mask();
            while (true) {
                skip_spaces();
                if (peek() == '^') {
                    ++pos_;
                    mask ^= parse_qubit_mask();
                } else {
                    break;
                }
            }
        }
        skip_spaces();
        if (peek() != '=') {
            throw parse_error("expected '='", pos_);
        }
        ++pos_;
        skip_spaces();
        const char c = peek();
        if (c != '0' && c != '1') {
            throw parse_error("expected '0' or '1' after '='", pos_);
        }
        ++pos_;
        return ConditionExpr::leaf(ParityCondition(ConditionLabel(n_, mask), c - '0'));
    }

    std::uint32_t parse_qubit_mask() {
        skip_spaces();
        if (peek() != 'q') {
            throw parse_error("expected a 'q<i>' atom", pos_);
        }
        const std::size_t start = pos_;
        ++pos_;
        std::size_t digits = 0;
        int index = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            index = index * 10 + (text_[pos_] - '0');
            if (index > kMaxQubits) {
                throw parse_error("qubit index too large", start);
            }
            ++pos_;
            ++digits;
        }
        if (digits == 0) {
            throw parse_error("expected a qubit index after 'q'", pos_);
        }
        if (index < 1 || index > n_.value) {
            throw parse_error("qubit index q" + std::to_string(index) +
                                  " out of range for n=" + std::to_string(n_.value),
                              start);
        }
        return std::uint32_t{1} << (n_.value - index);
    }

    bool try_keyword(std::string_view word) {
        skip_spaces();
        if (text_.substr(pos_, word.size()) != word) {
            return false;
        }
        // The keyword must not run into an identifier character.
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) {
            return false;
        }
        pos_ = after;
        return true;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    QubitCount n_;
    std::size_t pos_ = 0;
};

std::string leaf_text(const ParityCondition& pc) {
    if (pc.mask.bits() == 0) {
        return "0=" + std::to_string(pc.rhs);
    }
    std::string out;
    for (int i = 1; i <= pc.mask.qubits().value; ++i) {
        if (pc.mask.bit(i)) {
            if (!out.empty()) {
                out += "^";
            }
            out += "q" + std::to_string(i);
        }
    }
    return out + "=" + std::to_string(pc.rhs);
}

std::string wrapped(const ConditionExpr& e) {
    if (e.kind() == ConditionExpr::Kind::Leaf) {
        return leaf_text(e.condition());
    }
    return "(" + to_grammar_text(e) + ")";
}

}  // namespace

ConditionExpr parse_condition_expr(std::string_view text, QubitCount n) {
    return Parser(text, n).parse();
}

std::string to_grammar_text(const ConditionExpr& e) {
    switch (e.kind()) {
        case ConditionExpr::Kind::Leaf:
            return leaf_text(e.condition());
        case ConditionExpr::Kind::And:
            return wrapped(e.left()) + " AND " + wrapped(e.right());
        case ConditionExpr::Kind::Or:
            return wrapped(e.left()) + " OR " + wrapped(e.right());
        case ConditionExpr::Kind::Not:
            return "NOT (" + to_grammar_text(e.operand()) + ")";
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace qcs
