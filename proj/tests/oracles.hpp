#pragma once

// Brute-force oracles, independent of the library's counting and sampling
// paths: plain enumeration of S_n and of compositions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"

namespace oracle {

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(word);
    } while (std::next_permutation(word.begin(), word.end()));
}

inline std::vector<int> descent_set_of(const std::vector<int>& word) {
    std::vector<int> d;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] < word[i - 1]) d.push_back(static_cast<int>(i));
    return d;
}

// #{σ ∈ S_n : des(σ) = D} for every composition of n at once.
inline std::map<zigzag::Composition, std::uint64_t> descent_census(int n) {
    std::map<zigzag::Composition, std::uint64_t> out;
    for_each_permutation(n, [&](const std::vector<int>& w) {
        ++out[zigzag::Composition::from_descents(descent_set_of(w), n)];
    });
    return out;
}

inline std::vector<zigzag::Composition> compositions_of(int n) {
    std::vector<zigzag::Composition> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (n - 1)); ++mask) {
        std::vector<int> descents;
        for (int d = 1; d < n; ++d)
            if (mask & (std::uint32_t(1) << (d - 1))) descents.push_back(d);
        out.push_back(zigzag::Composition::from_descents(descents, n));
    }
    return out;
}

// All fillings of λ as words (σ with des(σ) = D_λ), by direct scan of S_n.
inline std::vector<std::vector<int>> fillings_of(const zigzag::Composition& lambda) {
    std::vector<std::vector<int>> out;
    for_each_permutation(lambda.size(), [&](const std::vector<int>& w) {
        if (descent_set_of(w) == lambda.descents()) out.push_back(w);
    });
    return out;
}

}  // namespace oracle
