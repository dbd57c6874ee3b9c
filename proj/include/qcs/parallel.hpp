#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcs::detail {

// Loops below this many iterations stay serial; OpenMP setup costs more than
// the work at small n.
inline constexpr std::int64_t kOmpMinSize = std::int64_t{1} << 12;

inline constexpr std::int64_t kReduceChunk = std::int64_t{1} << 12;

// Chunked reduction with a chunk size fixed by the element count alone, so the
// accumulation order (and hence the floating-point result) is identical for
// any thread count.
template <class Acc, class TermFn>
Acc chunked_sum(std::int64_t count, TermFn term) {
    const std::int64_t chunks = (count + kReduceChunk - 1) / kReduceChunk;
    std::vector<Acc> partial(static_cast<std::size_t>(chunks), Acc{});
#pragma omp parallel for if (count >= kOmpMinSize)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * kReduceChunk;
        const std::int64_t end = std::min(count, begin + kReduceChunk);
        Acc acc{};
        for (std::int64_t i = begin; i < end; ++i) {
            acc += term(i);
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }
    Acc total{};
    for (const Acc& p : partial) {
        total += p;
    }
    return total;
}

}  // namespace qcs::detail
