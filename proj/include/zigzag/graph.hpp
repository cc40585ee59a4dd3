#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"
#include "zigzag/rng.hpp"

namespace zigzag {

// Children and parents in the zigzag lattice: add one cell by growing a part
// or by splitting a part with one extra cell. Both lists are deduplicated
// and sorted; every vertex of degree n has exactly n+1 children.
std::vector<Composition> covers(const Composition& mu);
std::vector<Composition> parents(const Composition& lambda);

// d(λ) = #{σ ∈ S_n : des(σ) = D_λ}, by the rank-insertion dynamic program:
// row i holds the number of fillings of the first i cells whose last cell
// has a given relative rank; prefix sums step ascending or descending with
// the descent indicator. Exact.
BigInt count_fillings(const Composition& lambda);

// d of every prefix λ_{≤i} (index i, i = 0..n) from a single forward sweep,
// and of every suffix λ_{>i} via the reversed-complement ribbon.
std::vector<BigInt> prefix_filling_counts(const Composition& lambda);
std::vector<BigInt> suffix_filling_counts(const Composition& lambda);

// d(μ,λ): number of saturated paths μ → λ; 0 when |μ| > |λ| or unreachable.
// Level-by-level over descent bitmasks; practical bound |λ| ≤ 24.
BigInt count_paths(const Composition& mu, const Composition& lambda);

// d(μ,λ) for every μ of size k at once (one backward sweep from λ).
std::map<Composition, BigInt> path_counts_to(const Composition& lambda, int k);

// K_μ(λ) = d(μ,λ)/d(λ), kept unreduced so the denominator stays d(λ).
struct KernelValue {
    BigInt num, den;
    Rational value() const { return Rational(num, den); }
    double approx() const { return to_double(value()); }
};
KernelValue martin_kernel(const Composition& mu, const Composition& lambda);

// Uniform sampling of standard fillings (equivalently, of the dual walk
// paths λ → ∅). One table per λ; rows are kept normalized in double
// precision, the exact law is preserved because only within-row ratios
// enter the backward rank draws.
class FillingSampler {
public:
    explicit FillingSampler(const Composition& lambda);

    int size() const { return n_; }

    Permutation sample(Rng& rng) const;

    // Cells occupied by the values 1..k (index v-1 → cell of value v).
    // O(n log n) per draw; enough to project the sample to S_k.
    std::vector<int> sample_low_cells(int k, Rng& rng) const;

private:
    void draw_ranks(Rng& rng, std::vector<int>& ranks) const;

    int n_ = 0;
    std::vector<char> desc_;              // descent indicator, index 1..n-1
    std::vector<std::vector<double>> cum_;  // cum_[i-1] = cumulative row i
};

// One-shot draw; build a FillingSampler directly when sampling repeatedly.
Permutation sample_uniform_filling(const Composition& lambda, Rng& rng);

// Composition of k recording des(σ_{↓k}) given the cells of values 1..k.
Composition projected_descents(const std::vector<int>& low_cells);

struct McEstimate {
    double estimate = 0.0;
    double stderror = 0.0;
    std::uint64_t samples = 0;
};

// Monte Carlo estimate of K_μ(λ) as freq{des((σ_λ)_{↓k}) = D_μ} / d(μ),
// with the binomial standard error propagated. Deterministic for a fixed
// seed regardless of thread count.
McEstimate estimate_kernel(const Composition& mu, const Composition& lambda,
                           std::uint64_t samples, std::uint64_t seed, bool parallel = true);

// True iff p((1)) = 1 and p(μ) = Σ_{μ↗ν} p(ν) for all |μ| < N.
// p must be defined on every composition of sizes 1..N.
bool check_harmonic(const std::map<Composition, Rational>& p, int N);

}  // namespace zigzag
