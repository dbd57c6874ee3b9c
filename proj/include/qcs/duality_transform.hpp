#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcs/condition_core.hpp"
#include "qcs/qcondition.hpp"
#include "qcs/statevector.hpp"

namespace qcs {

// Transform kernel value for one (outcome, condition) pair: +1 when
// popcount(h AND j) is even, -1 when odd. Computed as a parity sign, never
// through complex exponentials.
double transform_kernel(const OutcomeLabel& h, const ConditionLabel& j);

struct TransformKernelEntry {
    OutcomeLabel h;
    ConditionLabel j;
    double value;
};

std::vector<TransformKernelEntry> kernel_table(QubitCount n);

// Full transform matrix, entry [j][h] = kernel(h, j) / sqrt(2^n). Dense; meant
// for small n.
std::vector<std::vector<double>> transform_matrix(QubitCount n);

// Walsh-Hadamard transform, in-place butterfly with a 1/sqrt(2) factor per
// stage. Self-inverse. Throws on a non-power-of-two length.
void wht_in_place(std::span<Amplitude> x);
std::vector<Amplitude> wht(std::vector<Amplitude> x);

QConditionVector state_to_condition(const StateVector& s);
StateVector condition_to_state(const QConditionVector& phi);

enum class LogBase { natural, two };

// Shannon entropy of |x_i|^2 with 0 log 0 := 0. Requires a normalized array.
double entropy(std::span<const Amplitude> amplitudes, LogBase base = LogBase::natural);

struct EntropyPair {
    double state_entropy = 0.0;
    double condition_entropy = 0.0;
    LogBase base = LogBase::natural;

    double sum() const { return state_entropy + condition_entropy; }
};

// Entropy of the outcome distribution plus entropy of the transformed
// condition distribution.
EntropyPair uncertainty_sum(const StateVector& s, LogBase base = LogBase::natural);

// Normalized complex-Gaussian random state from the pinned generator.
StateVector random_state(QubitCount n, std::uint64_t seed);

struct ScanRow {
    std::int64_t index = 0;
    double state_entropy = 0.0;
    double condition_entropy = 0.0;
    std::uint64_t seed = 0;

    double sum() const { return state_entropy + condition_entropy; }
};

struct ScanResult {
    QubitCount n;
    LogBase base = LogBase::natural;
    double min_sum = 0.0;
    std::int64_t argmin_index = 0;
    std::vector<Amplitude> argmin_amplitudes;
    std::vector<ScanRow> rows;
    std::vector<std::uint64_t> histogram;  // entropy-sum counts over [0, 2n log 2]
    double histogram_bin_width = 0.0;

    StateVector argmin_state() const { return StateVector(n, argmin_amplitudes); }
};

inline constexpr std::size_t kScanHistogramBins = 50;

// Empirical scan of the entropy-sum over random states. Per-sample sub-seeds
// are derived from the base seed with splitmix64, so shards are independent
// and the result does not depend on the thread count.
ScanResult min_uncertainty_scan(QubitCount n, std::int64_t samples, std::uint64_t seed,
                                LogBase base = LogBase::natural);

}  // namespace qcs
