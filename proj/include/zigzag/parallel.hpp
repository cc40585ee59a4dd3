#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zigzag {

// Deterministic fan-out for Monte Carlo loops. Work is cut into fixed-size
// blocks; each block runs on its own derived RNG stream and writes its own
// result slot, and slots are merged in block order afterwards. The outcome
// is therefore independent of the thread count, and the serial path is the
// reference the OpenMP path is tested against. Block sizes are per-kernel
// constants chosen so a typical run spans many blocks.
inline constexpr std::uint64_t kMcBlockSize = 4096;   // cheap per-sample kernels
inline constexpr std::uint64_t kWalkBlockSize = 256;  // one long walk per sample
inline constexpr std::uint64_t kPathBlockSize = 8;    // full paintbox paths

template <class Result, class Fn>
std::vector<Result> map_blocks(std::uint64_t n_blocks, Fn&& fn, bool parallel) {
    std::vector<Result> out(n_blocks);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_blocks); ++b)
            out[static_cast<std::size_t>(b)] = fn(static_cast<std::uint64_t>(b));
        return out;
    }
#else
    (void)parallel;
#endif
    for (std::uint64_t b = 0; b < n_blocks; ++b) out[static_cast<std::size_t>(b)] = fn(b);
    return out;
}

inline std::uint64_t block_count(std::uint64_t total, std::uint64_t block = kMcBlockSize) {
    return (total + block - 1) / block;
}

inline std::uint64_t block_begin(std::uint64_t b, std::uint64_t block = kMcBlockSize) {
    return b * block;
}

inline std::uint64_t block_size_at(std::uint64_t b, std::uint64_t total,
                                   std::uint64_t block = kMcBlockSize) {
    const std::uint64_t lo = b * block;
    return lo >= total ? 0 : (total - lo < block ? total - lo : block);
}

}  // namespace zigzag
