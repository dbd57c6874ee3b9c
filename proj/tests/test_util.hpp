#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "qcs/condition_core.hpp"
#include "qcs/rng.hpp"
#include "qcs/statevector.hpp"

namespace qcs::testing {

inline bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline bool close(Amplitude a, Amplitude b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline bool close_all(std::span<const Amplitude> a, std::span<const Amplitude> b,
                      double tol = 1e-12) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!close(a[i], b[i], tol)) {
            return false;
        }
    }
    return true;
}

// Definition-level pairing oracle: explicit sum of f_i * q_i mod 2.
inline int pairing_oracle(const OutcomeLabel& v, const ConditionLabel& f) {
    int acc = 0;
    for (int i = 1; i <= v.qubits().value; ++i) {
        acc ^= v.bit(i) & f.bit(i);
    }
    return acc;
}

inline std::set<std::uint32_t> label_bits(const std::vector<ConditionLabel>& labels) {
    std::set<std::uint32_t> out;
    for (const auto& l : labels) {
        out.insert(l.bits());
    }
    return out;
}

inline std::set<std::uint32_t> event_bits(const Event& e) {
    std::set<std::uint32_t> out;
    for (const auto& m : e.members()) {
        out.insert(m.bits());
    }
    return out;
}

inline Event make_event(QubitCount n, std::initializer_list<std::uint32_t> outcomes) {
    Event e(n);
    for (auto o : outcomes) {
        e.set(o);
    }
    return e;
}

// Normalized (u1, u2) pair for the first-column unitary family.
inline std::pair<Amplitude, Amplitude> random_column_pair(SeededRng& rng) {
    Amplitude u1{rng.next_gaussian(), rng.next_gaussian()};
    Amplitude u2{rng.next_gaussian(), rng.next_gaussian()};
    const double norm = std::sqrt(std::norm(u1) + std::norm(u2));
    if (norm == 0.0) {
        return {Amplitude{1}, Amplitude{0}};
    }
    return {u1 / norm, u2 / norm};
}

// General random 2x2 unitary: first-column family times a phase on the second
// column, so tests are not restricted to that family.
inline Mat2 random_unitary(SeededRng& rng) {
    auto [u1, u2] = random_column_pair(rng);
    const double theta = 2.0 * 3.14159265358979323846 * rng.next_unit();
    const Amplitude phase{std::cos(theta), std::sin(theta)};
    Mat2 m = unitary_from_first_column(u1, u2);
    m.m[1] *= phase;
    m.m[3] *= phase;
    return m;
}

}  // namespace qcs::testing
