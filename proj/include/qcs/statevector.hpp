#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcs/condition_core.hpp"

namespace qcs {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kCompareTolerance = 1e-12;
inline constexpr double kProjectionEpsilon = 1e-12;

// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<Amplitude, 4> m{};

    Amplitude operator()(int row, int col) const { return m[static_cast<std::size_t>(row * 2 + col)]; }

    bool is_unitary(double tol = kNormTolerance) const;

    static Mat2 identity() { return Mat2{{Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{1}}}; }
    static Mat2 hadamard();
    static Mat2 pauli_x() { return Mat2{{Amplitude{0}, Amplitude{1}, Amplitude{1}, Amplitude{0}}}; }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

// The unitary [[u1, conj(u2)], [u2, -conj(u1)]] determined by its first
// column; requires |u1|^2 + |u2|^2 = 1.
Mat2 unitary_from_first_column(Amplitude u1, Amplitude u2);

// Elementary gate. Qubit indices are 1-based with q_1 the most significant
// bit of the amplitude index. CU carries the control value it acts on; CNOT
// and CCNOT act on control value 1.
struct Gate {
    enum class Kind { U, CU, CNOT, CCNOT };

    Kind kind = Kind::U;
    int target = 0;
    int control = 0;
    int control2 = 0;
    int control_value = 1;
    Mat2 matrix = Mat2::identity();

    static Gate single(int target, const Mat2& matrix);
    static Gate controlled(int control, int control_value, int target, const Mat2& matrix);
    static Gate cnot(int control, int target);
    static Gate ccnot(int control1, int control2, int target);

    // Throws if any index is out of [1, n] or indices collide.
    void check_indices(QubitCount n) const;

    friend bool operator==(const Gate& a, const Gate& b) {
        return a.kind == b.kind && a.target == b.target && a.control == b.control &&
               a.control2 == b.control2 && a.control_value == b.control_value &&
               a.matrix == b.matrix;
    }
};

struct Circuit {
    QubitCount n;
    std::vector<Gate> gates;

    explicit Circuit(QubitCount n_) : n(n_) {}
    Circuit(QubitCount n_, std::vector<Gate> gates_);

    void append(const Gate& g);
};

// Dense 2^n complex amplitudes, unit norm within kNormTolerance.
class StateVector {
public:
    StateVector(QubitCount n, std::vector<Amplitude> amplitudes);

    QubitCount qubits() const { return n_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

    std::vector<Amplitude> take_amplitudes() && { return std::move(amplitudes_); }

private:
    QubitCount n_;
    std::vector<Amplitude> amplitudes_;
};

struct SamplingEstimate {
    double p_hat = 0.0;
    std::int64_t shots = 0;
    double sigma_mean_est = 0.0;
    std::uint64_t seed = 0;
};

StateVector basis_state(QubitCount n, const OutcomeLabel& v);

StateVector apply_gate(const StateVector& s, const Gate& g);
StateVector apply_circuit(const StateVector& s, const Circuit& c);

// The 4-qubit fully entangled family with pairwise-normalized coefficients
// (|a1|^2+|a2|^2 = |b1|^2+|b2|^2 = |c1|^2+|c2|^2 = 1).
StateVector standard_state_4q(Amplitude a1, Amplitude a2, Amplitude b1, Amplitude b2,
                              Amplitude c1, Amplitude c2);

double event_probability_exact(const StateVector& s, const Event& e);

struct Projection {
    double probability;
    StateVector state;
};

// Zeroes amplitudes outside the event and renormalizes. Throws
// std::domain_error when the event probability is below kProjectionEpsilon.
Projection project(const StateVector& s, const Event& e);

// Draws `shots` outcomes from |C_h|^2 with the pinned generator and counts
// hits inside the event. Reproducible for a fixed seed.
SamplingEstimate sample_event(const StateVector& s, const Event& e, std::int64_t shots,
                              std::uint64_t seed);

// ceil((sigma / sigma_mean)^2); the measurement count needed for a target
// standard error of the mean.
std::int64_t required_shots(double sigma, double sigma_mean);

}  // namespace qcs
