#pragma once

#include <span>
#include <vector>

#include "qcs/condition_core.hpp"
#include "qcs/statevector.hpp"

namespace qcs {

// Unit vector over the condition basis: 2^m complex amplitudes indexed by
// condition labels, j_1 most significant. Position i in the superposition of
// "missing" (|0] component) and "present" (|1] component).
class QConditionVector {
public:
    QConditionVector(QubitCount positions, std::vector<Amplitude> amplitudes);

    QubitCount positions() const { return m_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

    std::vector<Amplitude> take_amplitudes() && { return std::move(amplitudes_); }

private:
    QubitCount m_;
    std::vector<Amplitude> amplitudes_;
};

QConditionVector qcond_basis(QubitCount m, const ConditionLabel& j);

// 1-position vector a1|0] + a2|1].
QConditionVector one_q_condition(Amplitude a1, Amplitude a2);

// The product composition: amplitudes multiply and labels concatenate, so the
// amplitude array is the Kronecker product of the inputs.
QConditionVector oplus_product(const QConditionVector& u, const QConditionVector& v);

Amplitude inner_product(const QConditionVector& a, const QConditionVector& b);

// (|00] + |11]) / sqrt(2).
QConditionVector bell_condition();

// Applies the same 2x2 unitary to every position (the m-fold product of B
// acting on the amplitude array).
QConditionVector change_basis_per_position(const QConditionVector& phi, const Mat2& basis);

// b1*(u1 (+) v1) + b2*(u2 (+) v2) with u1 _|_ u2 and v1 _|_ v2; normalized by
// construction.
QConditionVector entangled_condition_2q(Amplitude b1, Amplitude b2,
                                        const QConditionVector& u1, const QConditionVector& u2,
                                        const QConditionVector& v1, const QConditionVector& v2);

// True iff the 2x2 coefficient matrix [[D00, D01], [D10, D11]] has nonzero
// determinant (Schmidt rank 2).
bool is_entangled_2q(const QConditionVector& phi);

// Text form of a basis condition; optionally lists the missing positions.
std::string interpret_basis(const ConditionLabel& j, bool annotate_missing = false);

}  // namespace qcs
