#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcs {

// Dense 2^n storage everywhere; 24 qubits = 16M amplitudes / 2MB bitsets.
inline constexpr int kMaxQubits = 24;

struct QubitCount {
    int value = 1;

    QubitCount() = default;
    explicit QubitCount(int n) : value(n) {
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument("qubit count must be in [1," +
                                        std::to_string(kMaxQubits) + "], got " +
                                        std::to_string(n));
        }
    }

    std::size_t dimension() const { return std::size_t{1} << value; }

    friend bool operator==(QubitCount a, QubitCount b) { return a.value == b.value; }
    friend bool operator!=(QubitCount a, QubitCount b) { return a.value != b.value; }
};

// n-bit label over GF(2). q_1 (or f_1) is the most significant bit of the
// integer value, so the 3-qubit outcome 011 is index 3. Outcome and condition
// labels share the layout but are distinct types.
template <class Tag>
class BasicLabel {
public:
    BasicLabel(QubitCount n, std::uint32_t bits) : n_(n), bits_(bits) {
        if (bits >= (std::uint32_t{1} << n.value)) {
            throw std::invalid_argument("label value " + std::to_string(bits) +
                                        " does not fit in " + std::to_string(n.value) +
                                        " bits");
        }
    }

    static BasicLabel from_string(const std::string& s) {
        QubitCount n(static_cast<int>(s.size()));
        std::uint32_t bits = 0;
        for (char c : s) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("label string must be binary, got '" + s + "'");
            }
            bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return BasicLabel(n, bits);
    }

    QubitCount qubits() const { return n_; }
    std::uint32_t bits() const { return bits_; }

    // Value of q_i / f_i, 1-based from the left.
    int bit(int i) const {
        if (i < 1 || i > n_.value) {
            throw std::invalid_argument("bit index " + std::to_string(i) +
                                        " out of range for n=" + std::to_string(n_.value));
        }
        return static_cast<int>((bits_ >> (n_.value - i)) & 1u);
    }

    int popcount() const { return std::popcount(bits_); }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n_.value), '0');
        for (int i = 1; i <= n_.value; ++i) {
            s[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + bit(i));
        }
        return s;
    }

    // GF(2) vector addition (bit-wise XOR) within one space.
    friend BasicLabel operator^(const BasicLabel& a, const BasicLabel& b) {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("label length mismatch: " +
                                        std::to_string(a.n_.value) + " vs " +
                                        std::to_string(b.n_.value));
        }
        return BasicLabel(a.n_, a.bits_ ^ b.bits_);
    }

    friend bool operator==(const BasicLabel& a, const BasicLabel& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BasicLabel& a, const BasicLabel& b) { return !(a == b); }
    friend bool operator<(const BasicLabel& a, const BasicLabel& b) {
        return a.bits_ < b.bits_;
    }

private:
    QubitCount n_;
    std::uint32_t bits_;
};

using OutcomeLabel = BasicLabel<struct OutcomeSpaceTag>;
using ConditionLabel = BasicLabel<struct ConditionSpaceTag>;

// GF(2) bilinear pairing between the outcome space and its dual. 0 means the
// outcome satisfies the condition.
inline int pairing(const OutcomeLabel& v, const ConditionLabel& f) {
    if (v.qubits() != f.qubits()) {
        throw std::invalid_argument("pairing requires labels of equal length");
    }
    return std::popcount(v.bits() & f.bits()) & 1;
}

// The bit-identical map between the two spaces (its own inverse).
inline ConditionLabel dual_correspondence(const OutcomeLabel& v) {
    return ConditionLabel(v.qubits(), v.bits());
}
inline OutcomeLabel dual_correspondence(const ConditionLabel& f) {
    return OutcomeLabel(f.qubits(), f.bits());
}

// Half-set parity condition: the masked qubits XOR to rhs. A zero mask is the
// always-true condition for rhs=0 and the always-false one for rhs=1.
struct ParityCondition {
    ConditionLabel mask;
    int rhs = 0;

    ParityCondition(ConditionLabel m, int r) : mask(m), rhs(r) {
        if (r != 0 && r != 1) {
            throw std::invalid_argument("parity condition rhs must be 0 or 1");
        }
    }

    bool always_true() const { return mask.bits() == 0 && rhs == 0; }
    bool always_false() const { return mask.bits() == 0 && rhs == 1; }

    friend bool operator==(const ParityCondition& a, const ParityCondition& b) {
        return a.mask == b.mask && a.rhs == b.rhs;
    }
};

// Subset of the 2^n outcomes, stored as a dense bitset (bit i <=> outcome i).
class Event {
public:
    explicit Event(QubitCount n, bool filled = false);

    static Event none(QubitCount n) { return Event(n, false); }
    static Event full(QubitCount n) { return Event(n, true); }

    QubitCount qubits() const { return n_; }
    std::size_t size() const { return n_.dimension(); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63u)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63u); }

    std::uint64_t count() const;

    Event operator&(const Event& other) const;
    Event operator|(const Event& other) const;
    Event operator~() const;

    bool operator==(const Event& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }
    bool operator!=(const Event& other) const { return !(*this == other); }

    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    // Materializes the member outcomes in increasing index order.
    std::vector<OutcomeLabel> members() const;

private:
    void check_same_space(const Event& other) const;
    std::uint64_t tail_mask() const;

    QubitCount n_;
    std::vector<std::uint64_t> words_;
};

// Boolean expression over parity conditions. Nodes own their children; the
// tree is a value type (deep copies) and every node agrees on n.
class ConditionExpr {
public:
    enum class Kind { Leaf, And, Or, Not };

    static ConditionExpr leaf(ParityCondition pc);
    static ConditionExpr conjunction(ConditionExpr lhs, ConditionExpr rhs);
    static ConditionExpr disjunction(ConditionExpr lhs, ConditionExpr rhs);
    static ConditionExpr negation(ConditionExpr operand);

    ConditionExpr(const ConditionExpr& other);
    ConditionExpr& operator=(const ConditionExpr& other);
    ConditionExpr(ConditionExpr&&) noexcept = default;
    ConditionExpr& operator=(ConditionExpr&&) noexcept = default;

    Kind kind() const { return kind_; }
    QubitCount qubits() const { return n_; }

    const ParityCondition& condition() const;  // Leaf
    const ConditionExpr& left() const;         // And/Or
    const ConditionExpr& right() const;        // And/Or
    const ConditionExpr& operand() const;      // Not

    bool operator==(const ConditionExpr& other) const;
    bool operator!=(const ConditionExpr& other) const { return !(*this == other); }

private:
    ConditionExpr(Kind kind, QubitCount n);

    Kind kind_;
    QubitCount n_;
    std::unique_ptr<ParityCondition> leaf_;
    std::unique_ptr<ConditionExpr> lhs_;
    std::unique_ptr<ConditionExpr> rhs_;
};

// Renders "q1⊕q3⊕q4=0"; a zero mask renders "0=rhs".
std::string condition_to_text(const ConditionLabel& mask, int rhs);

// All conditions f with pairing(v, f) = 0, in increasing label order. A
// subgroup of size 2^(n-1) for v != 0 and 2^n for v = 0.
std::vector<ConditionLabel> annihilator(const OutcomeLabel& v);

// All outcomes v with pairing(v, f) = 0.
Event satisfying_set(const ConditionLabel& f);

// Outcomes whose masked parity equals rhs.
Event parity_event(const ParityCondition& pc);

Event eval_expr(const ConditionExpr& e);

// Conjunction of n single-qubit conditions whose event is exactly {v}.
ConditionExpr single_outcome_expr(const OutcomeLabel& v);

// Number of And/Or/Not nodes (leaves not counted).
std::size_t expr_op_count(const ConditionExpr& e);

}  // namespace qcs
