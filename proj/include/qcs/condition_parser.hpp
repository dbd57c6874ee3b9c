#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcs/condition_core.hpp"

namespace qcs {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: atoms `q<i>` joined by `^` (or a bare `0`), comparison `=0`/`=1`,
// combinators NOT > AND > OR (left-associative), parentheses. Repeated atoms
// cancel (GF(2)).
ConditionExpr parse_condition_expr(std::string_view text, QubitCount n);

// Canonical grammar form; parses back to an identical tree.
std::string to_grammar_text(const ConditionExpr& e);

}  // namespace qcs
