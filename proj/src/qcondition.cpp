#include "qcs/qcondition.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qcs/parallel.hpp"

namespace qcs {

namespace {

double squared_norm(std::span<const Amplitude> a) {
    return detail::chunked_sum<double>(static_cast<std::int64_t>(a.size()),
                                       [&](std::int64_t i) { return std::norm(a[static_cast<std::size_t>(i)]); });
}

void apply_per_position(std::vector<Amplitude>& a, QubitCount m, const Mat2& basis) {
    for (int position = 1; position <= m.value; ++position) {
        const std::int64_t mask = std::int64_t{1} << (m.value - position);
        const std::int64_t low_mask = mask - 1;
        const std::int64_t half = static_cast<std::int64_t>(m.dimension()) / 2;
        const Amplitude m00 = basis(0, 0), m01 = basis(0, 1), m10 = basis(1, 0), m11 = basis(1, 1);
#pragma omp parallel for if (half >= detail::kOmpMinSize)
        for (std::int64_t i = 0; i < half; ++i) {
            const std::int64_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
            const std::int64_t i1 = i0 | mask;
            const Amplitude x0 = a[static_cast<std::size_t>(i0)];
            const Amplitude x1 = a[static_cast<std::size_t>(i1)];
            a[static_cast<std::size_t>(i0)] = m00 * x0 + m01 * x1;
            a[static_cast<std::size_t>(i1)] = m10 * x0 + m11 * x1;
        }
    }
}

}  // namespace

QConditionVector::QConditionVector(QubitCount positions, std::vector<Amplitude> amplitudes)
    : m_(positions), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != m_.dimension()) {
        throw std::invalid_argument("amplitude array must have 2^m entries");
    }
    const double norm2 = squared_norm(amplitudes_);
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("quantum condition vector is not normalized");
    }
}

double QConditionVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

QConditionVector qcond_basis(QubitCount m, const ConditionLabel& j) {
    if (j.qubits() != m) {
        throw std::invalid_argument("condition label length must equal m");
    }
    std::vector<Amplitude> a(m.dimension(), Amplitude{0});
    a[j.bits()] = Amplitude{1};
    return QConditionVector(m, std::move(a));
}

QConditionVector one_q_condition(Amplitude a1, Amplitude a2) {
    return QConditionVector(QubitCount(1), {a1, a2});
}

QConditionVector oplus_product(const QConditionVector& u, const QConditionVector& v) {
    const QubitCount m(u.positions().value + v.positions().value);
    const std::size_t v_dim = v.positions().dimension();
    std::vector<Amplitude> a(m.dimension());
    const std::int64_t count = static_cast<std::int64_t>(a.size());
#pragma omp parallel for if (count >= detail::kOmpMinSize)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        a[idx] = u[idx / v_dim] * v[idx % v_dim];
    }
    return QConditionVector(m, std::move(a));
}

Amplitude inner_product(const QConditionVector& a, const QConditionVector& b) {
    if (a.positions() != b.positions()) {
        throw std::invalid_argument("inner product requires equal position counts");
    }
    return detail::chunked_sum<Amplitude>(
        static_cast<std::int64_t>(a.positions().dimension()), [&](std::int64_t i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            return std::conj(a[idx]) * b[idx];
        });
}

QConditionVector bell_condition() {
    const double s = 1.0 / std::numbers::sqrt2;
    return QConditionVector(QubitCount(2), {Amplitude{s}, Amplitude{0}, Amplitude{0}, Amplitude{s}});
}

QConditionVector change_basis_per_position(const QConditionVector& phi, const Mat2& basis) {
    if (!basis.is_unitary()) {
        throw std::invalid_argument("basis change matrix is not unitary");
    }
    std::vector<Amplitude> a(phi.amplitudes().begin(), phi.amplitudes().end());
    apply_per_position(a, phi.positions(), basis);
    return QConditionVector(phi.positions(), std::move(a));
}

QConditionVector entangled_condition_2q(Amplitude b1, Amplitude b2,
                                        const QConditionVector& u1, const QConditionVector& u2,
                                        const QConditionVector& v1, const QConditionVector& v2) {
    if (u1.positions().value != 1 || u2.positions().value != 1 || v1.positions().value != 1 ||
        v2.positions().value != 1) {
        throw std::invalid_argument("branch conditions must be 1-position vectors");
    }
    if (std::abs(std::norm(b1) + std::norm(b2) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("|b1|^2 + |b2|^2 must be 1");
    }
    if (std::abs(inner_product(u1, u2)) > kNormTolerance ||
        std::abs(inner_product(v1, v2)) > kNormTolerance) {
        throw std::invalid_argument("branch conditions must be orthogonal");
    }
    const QConditionVector first = oplus_product(u1, v1);
    const QConditionVector second = oplus_product(u2, v2);
    std::vector<Amplitude> a(4);
    for (std::size_t i = 0; i < 4; ++i) {
        a[i] = b1 * first[i] + b2 * second[i];
    }
    return QConditionVector(QubitCount(2), std::move(a));
}

bool is_entangled_2q(const QConditionVector& phi) {
    if (phi.positions().value != 2) {
        throw std::invalid_argument("entanglement test is defined for 2-position vectors");
    }
    const Amplitude det = phi[0] * phi[3] - phi[1] * phi[2];
    return std::abs(det) > kNormTolerance;
}

std::string interpret_basis(const ConditionLabel& j, bool annotate_missing) {
    std::string text = condition_to_text(j, 0);
    if (annotate_missing && j.bits() != 0) {
        std::string missing;
        for (int i = 1; i <= j.qubits().value; ++i) {
            if (j.bit(i) == 0) {
                if (!missing.empty()) {
                    missing += ",";
                }
                missing += "q" + std::to_string(i);
            }
        }
        if (!missing.empty()) {
            text += " [missing: " + missing + "]";
        }
    }
    return text;
}

}  // namespace qcs
