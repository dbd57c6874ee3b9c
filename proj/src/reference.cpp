#include "qcs/reference.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcs::reference {

namespace {

int sign(std::size_t h, std::size_t j) {
    return (std::popcount(h & j) & 1) ? -1 : 1;
}

}  // namespace

std::vector<Amplitude> wht(const std::vector<Amplitude>& x) {
    const std::size_t size = x.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("transform length must be a power of two");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    std::vector<Amplitude> y(size, Amplitude{0});
    for (std::size_t j = 0; j < size; ++j) {
        Amplitude acc{0};
        for (std::size_t h = 0; h < size; ++h) {
            acc += static_cast<double>(sign(h, j)) * x[h];
        }
        y[j] = acc * scale;
    }
    return y;
}

std::vector<std::vector<Amplitude>> gate_matrix(const Gate& g, QubitCount n) {
    if (n.value > kMaxDenseQubits) {
        throw std::invalid_argument("dense gate matrices are limited to n <= " +
                                    std::to_string(kMaxDenseQubits));
    }
    g.check_indices(n);
    const std::size_t dim = n.dimension();
    auto bit_of = [&](std::size_t index, int qubit) -> std::size_t {
        return (index >> (n.value - qubit)) & 1u;
    };
    std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim, Amplitude{0}));

    for (std::size_t c = 0; c < dim; ++c) {
        switch (g.kind) {
            case Gate::Kind::U: {
                const std::size_t flip = std::size_t{1} << (n.value - g.target);
                for (std::size_t rt = 0; rt < 2; ++rt) {
                    const std::size_t r = (c & ~flip) | (rt ? flip : 0);
                    m[r][c] = g.matrix(static_cast<int>(rt), static_cast<int>(bit_of(c, g.target)));
                }
                break;
            }
            case Gate::Kind::CU: {
                if (bit_of(c, g.control) != static_cast<std::size_t>(g.control_value)) {
                    m[c][c] = Amplitude{1};
                    break;
                }
                const std::size_t flip = std::size_t{1} << (n.value - g.target);
                for (std::size_t rt = 0; rt < 2; ++rt) {
                    const std::size_t r = (c & ~flip) | (rt ? flip : 0);
                    m[r][c] = g.matrix(static_cast<int>(rt), static_cast<int>(bit_of(c, g.target)));
                }
                break;
            }
            case Gate::Kind::CNOT: {
                const std::size_t flip = std::size_t{1} << (n.value - g.target);
                const std::size_t r = bit_of(c, g.control) ? (c ^ flip) : c;
                m[r][c] = Amplitude{1};
                break;
            }
            case Gate::Kind::CCNOT: {
                const std::size_t flip = std::size_t{1} << (n.value - g.target);
                const bool both = bit_of(c, g.control) && bit_of(c, g.control2);
                const std::size_t r = both ? (c ^ flip) : c;
                m[r][c] = Amplitude{1};
                break;
            }
        }
    }
    return m;
}

std::vector<Amplitude> apply_dense(const std::vector<std::vector<Amplitude>>& matrix,
                                   const std::vector<Amplitude>& x) {
    if (matrix.size() != x.size()) {
        throw std::invalid_argument("matrix and vector sizes disagree");
    }
    std::vector<Amplitude> y(x.size(), Amplitude{0});
    for (std::size_t r = 0; r < x.size(); ++r) {
        Amplitude acc{0};
        for (std::size_t c = 0; c < x.size(); ++c) {
            acc += matrix[r][c] * x[c];
        }
        y[r] = acc;
    }
    return y;
}

std::vector<Amplitude> apply_gate(const std::vector<Amplitude>& x, QubitCount n, const Gate& g) {
    g.check_indices(n);
    const std::size_t dim = n.dimension();
    if (x.size() != dim) {
        throw std::invalid_argument("amplitude array must have 2^n entries");
    }
    auto bit_of = [&](std::size_t index, int qubit) -> std::size_t {
        return (index >> (n.value - qubit)) & 1u;
    };
    std::vector<Amplitude> y(x);
    const std::size_t flip = std::size_t{1} << (n.value - g.target);
    for (std::size_t i = 0; i < dim; ++i) {
        if (bit_of(i, g.target) != 0) {
            continue;  // handle each pair once, from its lower member
        }
        const std::size_t i0 = i;
        const std::size_t i1 = i | flip;
        switch (g.kind) {
            case Gate::Kind::U:
                y[i0] = g.matrix(0, 0) * x[i0] + g.matrix(0, 1) * x[i1];
                y[i1] = g.matrix(1, 0) * x[i0] + g.matrix(1, 1) * x[i1];
                break;
            case Gate::Kind::CU:
                if (bit_of(i0, g.control) == static_cast<std::size_t>(g.control_value)) {
                    y[i0] = g.matrix(0, 0) * x[i0] + g.matrix(0, 1) * x[i1];
                    y[i1] = g.matrix(1, 0) * x[i0] + g.matrix(1, 1) * x[i1];
                }
                break;
            case Gate::Kind::CNOT:
                if (bit_of(i0, g.control)) {
                    y[i0] = x[i1];
                    y[i1] = x[i0];
                }
                break;
            case Gate::Kind::CCNOT:
                if (bit_of(i0, g.control) && bit_of(i0, g.control2)) {
                    y[i0] = x[i1];
                    y[i1] = x[i0];
                }
                break;
        }
    }
    return y;
}

double event_probability(const StateVector& s, const Event& e) {
    if (e.qubits() != s.qubits()) {
        throw std::invalid_argument("event and state disagree on n");
    }
    double p = 0.0;
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        if (e.test(i)) {
            p += std::norm(s[i]);
        }
    }
    return p;
}

Event parity_event(const ParityCondition& pc) {
    const QubitCount n = pc.mask.qubits();
    Event out(n);
    for (std::size_t v = 0; v < n.dimension(); ++v) {
        if ((std::popcount(static_cast<std::uint32_t>(v) & pc.mask.bits()) & 1) == pc.rhs) {
            out.set(v);
        }
    }
    return out;
}

}  // namespace qcs::reference
