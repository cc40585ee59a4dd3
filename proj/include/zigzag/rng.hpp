#pragma once

#include <cstdint>
#include <random>

namespace zigzag {

// splitmix64 finalizer; used to decorrelate seeds derived from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seedable generator with hand-rolled distributions so that output streams
// are bit-identical across platforms (std:: distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

    // Independent stream derived from (master, stream); used by parallel
    // workers so results do not depend on the thread count.
    static Rng derived(std::uint64_t master, std::uint64_t stream) {
        return Rng(mix64(master) ^ mix64(stream * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
    }

    std::uint64_t u64() { return eng_(); }

    // Uniform on [0,1) with 53 random bits.
    double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t x;
        do {
            x = u64();
        } while (x >= limit);
        return x % n;
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace zigzag
