#include "qcs/duality_transform.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "qcs/parallel.hpp"
#include "qcs/rng.hpp"

namespace qcs {

double transform_kernel(const OutcomeLabel& h, const ConditionLabel& j) {
    if (h.qubits() != j.qubits()) {
        throw std::invalid_argument("kernel requires labels of equal length");
    }
    return (std::popcount(h.bits() & j.bits()) & 1) ? -1.0 : 1.0;
}

std::vector<TransformKernelEntry> kernel_table(QubitCount n) {
    const std::uint32_t dim = static_cast<std::uint32_t>(n.dimension());
    std::vector<TransformKernelEntry> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (std::uint32_t j = 0; j < dim; ++j) {
        for (std::uint32_t h = 0; h < dim; ++h) {
            const OutcomeLabel hl(n, h);
            const ConditionLabel jl(n, j);
            entries.push_back({hl, jl, transform_kernel(hl, jl)});
        }
    }
    return entries;
}

std::vector<std::vector<double>> transform_matrix(QubitCount n) {
    const std::uint32_t dim = static_cast<std::uint32_t>(n.dimension());
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<std::vector<double>> matrix(dim, std::vector<double>(dim));
    for (std::uint32_t j = 0; j < dim; ++j) {
        for (std::uint32_t h = 0; h < dim; ++h) {
            matrix[j][h] = scale * transform_kernel(OutcomeLabel(n, h), ConditionLabel(n, j));
        }
    }
    return matrix;
}

void wht_in_place(std::span<Amplitude> x) {
    const std::size_t size = x.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("transform length must be a power of two");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const std::int64_t half = static_cast<std::int64_t>(size) / 2;
    for (std::int64_t mask = 1; mask < static_cast<std::int64_t>(size); mask <<= 1) {
        const std::int64_t low_mask = mask - 1;
#pragma omp parallel for if (half >= detail::kOmpMinSize)
        for (std::int64_t i = 0; i < half; ++i) {
            const std::int64_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
            const std::int64_t i1 = i0 | mask;
            const Amplitude x0 = x[static_cast<std::size_t>(i0)];
            const Amplitude x1 = x[static_cast<std::size_t>(i1)];
            x[static_cast<std::size_t>(i0)] = (x0 + x1) * inv_sqrt2;
            x[static_cast<std::size_t>(i1)] = (x0 - x1) * inv_sqrt2;
        }
    }
}

std::vector<Amplitude> wht(std::vector<Amplitude> x) {
    wht_in_place(x);
    return x;
}

QConditionVector state_to_condition(const StateVector& s) {
    std::vector<Amplitude> a(s.amplitudes().begin(), s.amplitudes().end());
    wht_in_place(a);
    return QConditionVector(s.qubits(), std::move(a));
}

StateVector condition_to_state(const QConditionVector& phi) {
    std::vector<Amplitude> a(phi.amplitudes().begin(), phi.amplitudes().end());
    wht_in_place(a);
    return StateVector(phi.positions(), std::move(a));
}

double entropy(std::span<const Amplitude> amplitudes, LogBase base) {
    const std::int64_t count = static_cast<std::int64_t>(amplitudes.size());
    const double norm2 = detail::chunked_sum<double>(
        count, [&](std::int64_t i) { return std::norm(amplitudes[static_cast<std::size_t>(i)]); });
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("entropy requires a normalized amplitude array");
    }
    const double nats = detail::chunked_sum<double>(count, [&](std::int64_t i) {
        const double p = std::norm(amplitudes[static_cast<std::size_t>(i)]);
        return p > 0.0 ? -p * std::log(p) : 0.0;
    });
    return base == LogBase::natural ? nats : nats / std::numbers::ln2;
}

EntropyPair uncertainty_sum(const StateVector& s, LogBase base) {
    EntropyPair pair;
    pair.base = base;
    pair.state_entropy = entropy(s.amplitudes(), base);
    pair.condition_entropy = entropy(state_to_condition(s).amplitudes(), base);
    return pair;
}

namespace {

std::vector<Amplitude> random_amplitudes(QubitCount n, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Amplitude> a(n.dimension());
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Amplitude& amp : a) {
            amp = Amplitude{rng.next_gaussian(), rng.next_gaussian()};
            norm2 += std::norm(amp);
        }
    } while (norm2 == 0.0);
    const double scale = 1.0 / std::sqrt(norm2);
    for (Amplitude& amp : a) {
        amp *= scale;
    }
    return a;
}

}  // namespace

StateVector random_state(QubitCount n, std::uint64_t seed) {
    return StateVector(n, random_amplitudes(n, seed));
}

ScanResult min_uncertainty_scan(QubitCount n, std::int64_t samples, std::uint64_t seed,
                                LogBase base) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be >= 1");
    }

    std::vector<std::uint64_t> sub_seeds(static_cast<std::size_t>(samples));
    std::uint64_t state = seed;
    for (auto& s : sub_seeds) {
        s = splitmix64(state);
    }

    ScanResult result;
    result.n = n;
    result.base = base;
    result.rows.resize(static_cast<std::size_t>(samples));

    const double max_sum = 2.0 * n.value * (base == LogBase::natural ? std::numbers::ln2 : 1.0);
    result.histogram.assign(kScanHistogramBins, 0);
    result.histogram_bin_width = max_sum / static_cast<double>(kScanHistogramBins);

#pragma omp parallel for if (samples >= 8)
    for (std::int64_t i = 0; i < samples; ++i) {
        const std::uint64_t sub_seed = sub_seeds[static_cast<std::size_t>(i)];
        std::vector<Amplitude> amps = random_amplitudes(n, sub_seed);
        const double h_state = entropy(amps, base);
        wht_in_place(amps);
        const double h_cond = entropy(amps, base);
        result.rows[static_cast<std::size_t>(i)] = ScanRow{i, h_state, h_cond, sub_seed};
    }

    result.min_sum = result.rows[0].sum();
    result.argmin_index = 0;
    for (const ScanRow& row : result.rows) {
        const double sum = row.sum();
        if (sum < result.min_sum) {
            result.min_sum = sum;
            result.argmin_index = row.index;
        }
        std::size_t bin = static_cast<std::size_t>(sum / result.histogram_bin_width);
        if (bin >= kScanHistogramBins) {
            bin = kScanHistogramBins - 1;
        }
        ++result.histogram[bin];
    }
    result.argmin_amplitudes =
        random_amplitudes(n, sub_seeds[static_cast<std::size_t>(result.argmin_index)]);
    return result;
}

}  // namespace qcs
