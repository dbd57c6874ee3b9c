#pragma once

#include <vector>

#include "qcs/condition_core.hpp"
#include "qcs/statevector.hpp"

// Plain serial implementations kept as an independent route for tests and as
// the baseline for the benchmark target. No OpenMP, no bit-pair tricks.
namespace qcs::reference {

// Dense gate matrices get large quickly; 2^10 x 2^10 complex is 16 MB.
inline constexpr int kMaxDenseQubits = 10;

// Direct O(N^2) evaluation of the transform sum y_j = sum_h x_h E(h,j)/sqrt(N).
std::vector<Amplitude> wht(const std::vector<Amplitude>& x);

// Full 2^n x 2^n matrix of an elementary gate, built entry-wise from the gate
// definition (not from the fast kernels).
std::vector<std::vector<Amplitude>> gate_matrix(const Gate& g, QubitCount n);

std::vector<Amplitude> apply_dense(const std::vector<std::vector<Amplitude>>& matrix,
                                   const std::vector<Amplitude>& x);

// Straightforward per-index serial gate application.
std::vector<Amplitude> apply_gate(const std::vector<Amplitude>& x, QubitCount n, const Gate& g);

double event_probability(const StateVector& s, const Event& e);

Event parity_event(const ParityCondition& pc);

}  // namespace qcs::reference
