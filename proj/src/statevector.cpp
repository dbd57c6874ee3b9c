#include "qcs/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qcs/parallel.hpp"
#include "qcs/rng.hpp"

namespace qcs {

namespace {

// Pair-index expansion: inserts a zero bit at position `bit` of the compact
// index, yielding the lower member of an amplitude pair.
inline std::int64_t expand_index(std::int64_t compact, std::int64_t low_mask) {
    return ((compact & ~low_mask) << 1) | (compact & low_mask);
}

inline int bit_position(QubitCount n, int qubit) { return n.value - qubit; }

void apply_single_kernel(std::vector<Amplitude>& a, QubitCount n, int target, const Mat2& m) {
    const std::int64_t mask = std::int64_t{1} << bit_position(n, target);
    const std::int64_t low_mask = mask - 1;
    const std::int64_t half = static_cast<std::int64_t>(n.dimension()) / 2;
    const Amplitude m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
#pragma omp parallel for if (half >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::int64_t i0 = expand_index(i, low_mask);
        const std::int64_t i1 = i0 | mask;
        const Amplitude x0 = a[static_cast<std::size_t>(i0)];
        const Amplitude x1 = a[static_cast<std::size_t>(i1)];
        a[static_cast<std::size_t>(i0)] = m00 * x0 + m01 * x1;
        a[static_cast<std::size_t>(i1)] = m10 * x0 + m11 * x1;
    }
}

// Only pairs whose control bit matches are written, so amplitudes outside the
// control half-set stay bit-identical.
void apply_controlled_kernel(std::vector<Amplitude>& a, QubitCount n, int control,
                             int control_value, int target, const Mat2& m) {
    const std::int64_t mask = std::int64_t{1} << bit_position(n, target);
    const std::int64_t low_mask = mask - 1;
    const std::int64_t control_mask = std::int64_t{1} << bit_position(n, control);
    const std::int64_t control_want = control_value ? control_mask : 0;
    const std::int64_t half = static_cast<std::int64_t>(n.dimension()) / 2;
    const Amplitude m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
#pragma omp parallel for if (half >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::int64_t i0 = expand_index(i, low_mask);
        if ((i0 & control_mask) != control_want) {
            continue;
        }
        const std::int64_t i1 = i0 | mask;
        const Amplitude x0 = a[static_cast<std::size_t>(i0)];
        const Amplitude x1 = a[static_cast<std::size_t>(i1)];
        a[static_cast<std::size_t>(i0)] = m00 * x0 + m01 * x1;
        a[static_cast<std::size_t>(i1)] = m10 * x0 + m11 * x1;
    }
}

void apply_cnot_kernel(std::vector<Amplitude>& a, QubitCount n, int control, int target) {
    const std::int64_t mask = std::int64_t{1} << bit_position(n, target);
    const std::int64_t low_mask = mask - 1;
    const std::int64_t control_mask = std::int64_t{1} << bit_position(n, control);
    const std::int64_t half = static_cast<std::int64_t>(n.dimension()) / 2;
#pragma omp parallel for if (half >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::int64_t i0 = expand_index(i, low_mask);
        if ((i0 & control_mask) == 0) {
            continue;
        }
        std::swap(a[static_cast<std::size_t>(i0)], a[static_cast<std::size_t>(i0 | mask)]);
    }
}

void apply_ccnot_kernel(std::vector<Amplitude>& a, QubitCount n, int control1, int control2,
                        int target) {
    const std::int64_t mask = std::int64_t{1} << bit_position(n, target);
    const std::int64_t low_mask = mask - 1;
    const std::int64_t controls = (std::int64_t{1} << bit_position(n, control1)) |
                                  (std::int64_t{1} << bit_position(n, control2));
    const std::int64_t half = static_cast<std::int64_t>(n.dimension()) / 2;
#pragma omp parallel for if (half >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::int64_t i0 = expand_index(i, low_mask);
        if ((i0 & controls) != controls) {
            continue;
        }
        std::swap(a[static_cast<std::size_t>(i0)], a[static_cast<std::size_t>(i0 | mask)]);
    }
}

void apply_gate_in_place(std::vector<Amplitude>& a, QubitCount n, const Gate& g) {
    g.check_indices(n);
    switch (g.kind) {
        case Gate::Kind::U:
            if (!g.matrix.is_unitary()) {
                throw std::invalid_argument("gate block is not unitary");
            }
            apply_single_kernel(a, n, g.target, g.matrix);
            return;
        case Gate::Kind::CU:
            if (!g.matrix.is_unitary()) {
                throw std::invalid_argument("gate block is not unitary");
            }
            apply_controlled_kernel(a, n, g.control, g.control_value, g.target, g.matrix);
            return;
        case Gate::Kind::CNOT:
            apply_cnot_kernel(a, n, g.control, g.target);
            return;
        case Gate::Kind::CCNOT:
            apply_ccnot_kernel(a, n, g.control, g.control2, g.target);
            return;
    }
    throw std::logic_error("unreachable gate kind");
}

double squared_norm(std::span<const Amplitude> a) {
    return detail::chunked_sum<double>(static_cast<std::int64_t>(a.size()),
                                       [&](std::int64_t i) { return std::norm(a[static_cast<std::size_t>(i)]); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Mat2 / Gate / Circuit

bool Mat2::is_unitary(double tol) const {
    const Amplitude a = m[0], b = m[1], c = m[2], d = m[3];
    // Columns orthonormal.
    const double c0 = std::norm(a) + std::norm(c);
    const double c1 = std::norm(b) + std::norm(d);
    const Amplitude dot = std::conj(a) * b + std::conj(c) * d;
    return std::abs(c0 - 1.0) <= tol && std::abs(c1 - 1.0) <= tol && std::abs(dot) <= tol;
}

Mat2 Mat2::hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return Mat2{{Amplitude{s}, Amplitude{s}, Amplitude{s}, Amplitude{-s}}};
}

Mat2 unitary_from_first_column(Amplitude u1, Amplitude u2) {
    if (std::abs(std::norm(u1) + std::norm(u2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("|u1|^2 + |u2|^2 must be 1");
    }
    return Mat2{{u1, std::conj(u2), u2, -std::conj(u1)}};
}

Gate Gate::single(int target, const Mat2& matrix) {
    if (!matrix.is_unitary()) {
        throw std::invalid_argument("gate block is not unitary");
    }
    Gate g;
    g.kind = Kind::U;
    g.target = target;
    g.matrix = matrix;
    return g;
}

Gate Gate::controlled(int control, int control_value, int target, const Mat2& matrix) {
    if (!matrix.is_unitary()) {
        throw std::invalid_argument("gate block is not unitary");
    }
    if (control_value != 0 && control_value != 1) {
        throw std::invalid_argument("control value must be 0 or 1");
    }
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    Gate g;
    g.kind = Kind::CU;
    g.control = control;
    g.control_value = control_value;
    g.target = target;
    g.matrix = matrix;
    return g;
}

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    Gate g;
    g.kind = Kind::CNOT;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::ccnot(int control1, int control2, int target) {
    if (control1 == control2 || control1 == target || control2 == target) {
        throw std::invalid_argument("CCNOT indices must be distinct");
    }
    Gate g;
    g.kind = Kind::CCNOT;
    g.control = control1;
    g.control2 = control2;
    g.target = target;
    return g;
}

void Gate::check_indices(QubitCount n) const {
    auto check = [&](int idx) {
        if (idx < 1 || idx > n.value) {
            throw std::invalid_argument("qubit index " + std::to_string(idx) +
                                        " out of range for n=" + std::to_string(n.value));
        }
    };
    switch (kind) {
        case Kind::U:
            check(target);
            return;
        case Kind::CU:
        case Kind::CNOT:
            check(control);
            check(target);
            if (control == target) {
                throw std::invalid_argument("control and target must differ");
            }
            return;
        case Kind::CCNOT:
            check(control);
            check(control2);
            check(target);
            if (control == control2 || control == target || control2 == target) {
                throw std::invalid_argument("CCNOT indices must be distinct");
            }
            return;
    }
}

Circuit::Circuit(QubitCount n_, std::vector<Gate> gates_) : n(n_), gates(std::move(gates_)) {
    for (const Gate& g : gates) {
        g.check_indices(n);
    }
}

void Circuit::append(const Gate& g) {
    g.check_indices(n);
    gates.push_back(g);
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(QubitCount n, std::vector<Amplitude> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != n_.dimension()) {
        throw std::invalid_argument("amplitude array must have 2^n entries");
    }
    const double norm2 = squared_norm(amplitudes_);
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector basis_state(QubitCount n, const OutcomeLabel& v) {
    if (v.qubits() != n) {
        throw std::invalid_argument("outcome label length must equal n");
    }
    std::vector<Amplitude> a(n.dimension(), Amplitude{0});
    a[v.bits()] = Amplitude{1};
    return StateVector(n, std::move(a));
}

StateVector apply_gate(const StateVector& s, const Gate& g) {
    std::vector<Amplitude> a(s.amplitudes().begin(), s.amplitudes().end());
    apply_gate_in_place(a, s.qubits(), g);
    return StateVector(s.qubits(), std::move(a));
}

StateVector apply_circuit(const StateVector& s, const Circuit& c) {
    if (c.n != s.qubits()) {
        throw std::invalid_argument("circuit and state disagree on n");
    }
    std::vector<Amplitude> a(s.amplitudes().begin(), s.amplitudes().end());
    for (const Gate& g : c.gates) {
        apply_gate_in_place(a, s.qubits(), g);
    }
    return StateVector(s.qubits(), std::move(a));
}

StateVector standard_state_4q(Amplitude a1, Amplitude a2, Amplitude b1, Amplitude b2,
                              Amplitude c1, Amplitude c2) {
    auto check_pair = [](Amplitude x, Amplitude y, const char* name) {
        if (std::abs(std::norm(x) + std::norm(y) - 1.0) > kNormTolerance) {
            throw std::invalid_argument(std::string(name) + " coefficients must satisfy |x1|^2+|x2|^2=1");
        }
    };
    check_pair(a1, a2, "a");
    check_pair(b1, b2, "b");
    check_pair(c1, c2, "c");

    const Amplitude a[2] = {a1, a2};
    const Amplitude b[2] = {b1, b2};
    const Amplitude c[2] = {c1, c2};
    std::vector<Amplitude> amps(16, Amplitude{0});
    // q1 = alpha, q2 = alpha^beta, q3 = beta^gamma, q4 = gamma.
    for (int alpha = 0; alpha < 2; ++alpha) {
        for (int beta = 0; beta < 2; ++beta) {
            for (int gamma = 0; gamma < 2; ++gamma) {
                const int index = (alpha << 3) | ((alpha ^ beta) << 2) |
                                  ((beta ^ gamma) << 1) | gamma;
                amps[static_cast<std::size_t>(index)] = a[alpha] * b[beta] * c[gamma];
            }
        }
    }
    return StateVector(QubitCount(4), std::move(amps));
}

double event_probability_exact(const StateVector& s, const Event& e) {
    if (e.qubits() != s.qubits()) {
        throw std::invalid_argument("event and state disagree on n");
    }
    const auto a = s.amplitudes();
    return detail::chunked_sum<double>(
        static_cast<std::int64_t>(a.size()), [&](std::int64_t i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            return e.test(idx) ? std::norm(a[idx]) : 0.0;
        });
}

Projection project(const StateVector& s, const Event& e) {
    const double p = event_probability_exact(s, e);
    if (p <= kProjectionEpsilon) {
        throw std::domain_error("projection onto a zero-probability event");
    }
    const double scale = 1.0 / std::sqrt(p);
    const auto in = s.amplitudes();
    std::vector<Amplitude> out(in.size());
    const std::int64_t count = static_cast<std::int64_t>(in.size());
#pragma omp parallel for if (count >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        out[idx] = e.test(idx) ? in[idx] * scale : Amplitude{0};
    }
    return Projection{p, StateVector(s.qubits(), std::move(out))};
}

SamplingEstimate sample_event(const StateVector& s, const Event& e, std::int64_t shots,
                              std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (e.qubits() != s.qubits()) {
        throw std::invalid_argument("event and state disagree on n");
    }
    const auto a = s.amplitudes();
    std::vector<double> cumulative(a.size());
    double running = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        running += std::norm(a[i]);
        cumulative[i] = running;
    }

    SeededRng rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_unit() * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t outcome = static_cast<std::size_t>(it - cumulative.begin());
        if (e.test(outcome)) {
            ++hits;
        }
    }

    SamplingEstimate est;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(shots);
    est.shots = shots;
    est.sigma_mean_est = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(shots));
    est.seed = seed;
    return est;
}

std::int64_t required_shots(double sigma, double sigma_mean) {
    if (sigma_mean <= 0.0) {
        throw std::invalid_argument("sigma_mean must be positive");
    }
    if (sigma < 0.0) {
        throw std::invalid_argument("sigma must be non-negative");
    }
    const double ratio = sigma / sigma_mean;
    const double exact = ratio * ratio;
    // Snap to the nearest integer before rounding up so values that are whole
    // up to floating noise do not overshoot by one.
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) <= 1e-9 * std::max(1.0, exact)) {
        return static_cast<std::int64_t>(rounded);
    }
    return static_cast<std::int64_t>(std::ceil(exact));
}

}  // namespace qcs
