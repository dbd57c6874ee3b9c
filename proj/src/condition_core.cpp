#include "qcs/condition_core.hpp"

#include <bit>
#include <utility>

#include "qcs/parallel.hpp"

namespace qcs {

// ---------------------------------------------------------------------------
// Event

Event::Event(QubitCount n, bool filled)
    : n_(n), words_((n.dimension() + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
    if (filled) {
        words_.back() &= tail_mask();
    }
}

std::uint64_t Event::tail_mask() const {
    const std::size_t bits_in_tail = size() - (words_.size() - 1) * 64;
    return bits_in_tail == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << bits_in_tail) - 1;
}

void Event::check_same_space(const Event& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("event size mismatch: n=" + std::to_string(n_.value) +
                                    " vs n=" + std::to_string(other.n_.value));
    }
}

std::uint64_t Event::count() const {
    const std::int64_t nwords = static_cast<std::int64_t>(words_.size());
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) if (nwords >= detail::kOmpMinSize)
    for (std::int64_t w = 0; w < nwords; ++w) {
        total += static_cast<std::uint64_t>(std::popcount(words_[static_cast<std::size_t>(w)]));
    }
    return total;
}

Event Event::operator&(const Event& other) const {
    check_same_space(other);
    Event out(n_);
    const std::int64_t nwords = static_cast<std::int64_t>(words_.size());
#pragma omp parallel for if (nwords >= detail::kOmpMinSize)
    for (std::int64_t w = 0; w < nwords; ++w) {
        out.words_[static_cast<std::size_t>(w)] =
            words_[static_cast<std::size_t>(w)] & other.words_[static_cast<std::size_t>(w)];
    }
    return out;
}

Event Event::operator|(const Event& other) const {
    check_same_space(other);
    Event out(n_);
    const std::int64_t nwords = static_cast<std::int64_t>(words_.size());
#pragma omp parallel for if (nwords >= detail::kOmpMinSize)
    for (std::int64_t w = 0; w < nwords; ++w) {
        out.words_[static_cast<std::size_t>(w)] =
            words_[static_cast<std::size_t>(w)] | other.words_[static_cast<std::size_t>(w)];
    }
    return out;
}

Event Event::operator~() const {
    Event out(n_);
    const std::int64_t nwords = static_cast<std::int64_t>(words_.size());
#pragma omp parallel for if (nwords >= detail::kOmpMinSize)
    for (std::int64_t w = 0; w < nwords; ++w) {
        out.words_[static_cast<std::size_t>(w)] = ~words_[static_cast<std::size_t>(w)];
    }
    out.words_.back() &= tail_mask();
    return out;
}

std::vector<OutcomeLabel> Event::members() const {
    std::vector<OutcomeLabel> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.emplace_back(n_, static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Condition ops

std::string condition_to_text(const ConditionLabel& mask, int rhs) {
    if (rhs != 0 && rhs != 1) {
        throw std::invalid_argument("rhs must be 0 or 1");
    }
    if (mask.bits() == 0) {
        return "0=" + std::to_string(rhs);
    }
    std::string out;
    for (int i = 1; i <= mask.qubits().value; ++i) {
        if (mask.bit(i)) {
            if (!out.empty()) {
                out += "⊕";
            }
            out += "q" + std::to_string(i);
        }
    }
    out += "=" + std::to_string(rhs);
    return out;
}

std::vector<ConditionLabel> annihilator(const OutcomeLabel& v) {
    const std::uint32_t dim = static_cast<std::uint32_t>(v.qubits().dimension());
    std::vector<ConditionLabel> out;
    out.reserve(v.bits() == 0 ? dim : dim / 2);
    for (std::uint32_t f = 0; f < dim; ++f) {
        if ((std::popcount(v.bits() & f) & 1) == 0) {
            out.emplace_back(v.qubits(), f);
        }
    }
    return out;
}

Event parity_event(const ParityCondition& pc) {
    const QubitCount n = pc.mask.qubits();
    Event out(n);
    const std::uint32_t mask = pc.mask.bits();
    const std::uint64_t want = static_cast<std::uint64_t>(pc.rhs);
    const std::int64_t nwords = static_cast<std::int64_t>(out.words().size());
    auto& words = out.words();
#pragma omp parallel for if (nwords >= detail::kOmpMinSize)
    for (std::int64_t w = 0; w < nwords; ++w) {
        const std::uint64_t base = static_cast<std::uint64_t>(w) * 64;
        const std::uint64_t limit = std::min<std::uint64_t>(64, out.size() - base);
        std::uint64_t bits = 0;
        for (std::uint64_t b = 0; b < limit; ++b) {
            const std::uint32_t outcome = static_cast<std::uint32_t>(base + b);
            if ((static_cast<std::uint64_t>(std::popcount(outcome & mask)) & 1) == want) {
                bits |= std::uint64_t{1} << b;
            }
        }
        words[static_cast<std::size_t>(w)] = bits;
    }
    return out;
}

Event satisfying_set(const ConditionLabel& f) {
    return parity_event(ParityCondition(f, 0));
}

// ---------------------------------------------------------------------------
// ConditionExpr

ConditionExpr::ConditionExpr(Kind kind, QubitCount n) : kind_(kind), n_(n) {}

ConditionExpr ConditionExpr::leaf(ParityCondition pc) {
    ConditionExpr e(Kind::Leaf, pc.mask.qubits());
    e.leaf_ = std::make_unique<ParityCondition>(pc);
    return e;
}

ConditionExpr ConditionExpr::conjunction(ConditionExpr lhs, ConditionExpr rhs) {
    if (lhs.n_ != rhs.n_) {
        throw std::invalid_argument("expression operands disagree on n");
    }
    ConditionExpr e(Kind::And, lhs.n_);
    e.lhs_ = std::make_unique<ConditionExpr>(std::move(lhs));
    e.rhs_ = std::make_unique<ConditionExpr>(std::move(rhs));
    return e;
}

ConditionExpr ConditionExpr::disjunction(ConditionExpr lhs, ConditionExpr rhs) {
    if (lhs.n_ != rhs.n_) {
        throw std::invalid_argument("expression operands disagree on n");
    }
    ConditionExpr e(Kind::Or, lhs.n_);
    e.lhs_ = std::make_unique<ConditionExpr>(std::move(lhs));
    e.rhs_ = std::make_unique<ConditionExpr>(std::move(rhs));
    return e;
}

ConditionExpr ConditionExpr::negation(ConditionExpr operand) {
    ConditionExpr e(Kind::Not, operand.n_);
    e.lhs_ = std::make_unique<ConditionExpr>(std::move(operand));
    return e;
}

ConditionExpr::ConditionExpr(const ConditionExpr& other) : kind_(other.kind_), n_(other.n_) {
    if (other.leaf_) leaf_ = std::make_unique<ParityCondition>(*other.leaf_);
    if (other.lhs_) lhs_ = std::make_unique<ConditionExpr>(*other.lhs_);
    if (other.rhs_) rhs_ = std::make_unique<ConditionExpr>(*other.rhs_);
}

ConditionExpr& ConditionExpr::operator=(const ConditionExpr& other) {
    if (this != &other) {
        *this = ConditionExpr(other);
    }
    return *this;
}

const ParityCondition& ConditionExpr::condition() const {
    if (kind_ != Kind::Leaf) {
        throw std::logic_error("condition() called on a non-leaf expression");
    }
    return *leaf_;
}

const ConditionExpr& ConditionExpr::left() const {
    if (kind_ != Kind::And && kind_ != Kind::Or) {
        throw std::logic_error("left() called on a non-binary expression");
    }
    return *lhs_;
}

const ConditionExpr& ConditionExpr::right() const {
    if (kind_ != Kind::And && kind_ != Kind::Or) {
        throw std::logic_error("right() called on a non-binary expression");
    }
    return *rhs_;
}

const ConditionExpr& ConditionExpr::operand() const {
    if (kind_ != Kind::Not) {
        throw std::logic_error("operand() called on a non-Not expression");
    }
    return *lhs_;
}

bool ConditionExpr::operator==(const ConditionExpr& other) const {
    if (kind_ != other.kind_ || n_ != other.n_) {
        return false;
    }
    switch (kind_) {
        case Kind::Leaf:
            return *leaf_ == *other.leaf_;
        case Kind::Not:
            return *lhs_ == *other.lhs_;
        case Kind::And:
        case Kind::Or:
            return *lhs_ == *other.lhs_ && *rhs_ == *other.rhs_;
    }
    return false;
}

Event eval_expr(const ConditionExpr& e) {
    switch (e.kind()) {
        case ConditionExpr::Kind::Leaf:
            return parity_event(e.condition());
        case ConditionExpr::Kind::And:
            return eval_expr(e.left()) & eval_expr(e.right());
        case ConditionExpr::Kind::Or:
            return eval_expr(e.left()) | eval_expr(e.right());
        case ConditionExpr::Kind::Not:
            return ~eval_expr(e.operand());
    }
    throw std::logic_error("unreachable expression kind");
}

ConditionExpr single_outcome_expr(const OutcomeLabel& v) {
    const QubitCount n = v.qubits();
    auto single = [&](int qubit) {
        const std::uint32_t mask = std::uint32_t{1} << (n.value - qubit);
        return ConditionExpr::leaf(ParityCondition(ConditionLabel(n, mask), v.bit(qubit)));
    };
    ConditionExpr e = single(1);
    for (int i = 2; i <= n.value; ++i) {
        e = ConditionExpr::conjunction(std::move(e), single(i));
    }
    return e;
}

std::size_t expr_op_count(const ConditionExpr& e) {
    switch (e.kind()) {
        case ConditionExpr::Kind::Leaf:
            return 0;
        case ConditionExpr::Kind::Not:
            return 1 + expr_op_count(e.operand());
        case ConditionExpr::Kind::And:
        case ConditionExpr::Kind::Or:
            return 1 + expr_op_count(e.left()) + expr_op_count(e.right());
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace qcs
