#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"
#include "zigzag/rng.hpp"

namespace zigzag {

struct RatInterval {
    Rational lo, hi;  // the open interval (lo, hi)
    bool operator==(const RatInterval&) const = default;
};

// An element of U^(2): two disjoint finite unions of open subintervals of
// (0,1), labeled up and down. Intervals are stored sorted; intervals that
// merely touch at an endpoint stay distinct components (they are distinct
// open sets, and the limits of U_λ along scaled sequences need them).
class IntervalSystem {
public:
    IntervalSystem() = default;  // (∅, ∅)
    IntervalSystem(std::vector<RatInterval> up, std::vector<RatInterval> down);

    const std::vector<RatInterval>& up() const { return up_; }
    const std::vector<RatInterval>& down() const { return down_; }
    bool trivial() const { return up_.empty() && down_.empty(); }

    bool operator==(const IntervalSystem&) const = default;

    // "a,b;c,d" with rational or decimal endpoints; empty string = ∅.
    static IntervalSystem parse(const std::string& up, const std::string& down);
    std::string up_string() const;
    std::string down_string() const;

private:
    std::vector<RatInterval> up_, down_;
};

// sup of the Hausdorff distances between the complements of the up parts
// and of the down parts in [0,1]; exact rational arithmetic.
Rational paintbox_distance(const IntervalSystem& u, const IntervalSystem& v);

// U_λ: interiors of the unions of the cells' boundary intervals
// I_s = [(s−1)/(n−1), s/(n−1)], ascents up and descents down. Needs n ≥ 2.
IntervalSystem composition_paintbox(const Composition& lambda);

// Run paintbox Ũ_λ: one interval ((a_i−1)/n, (a_{i+1}−1)/n) per extreme
// a_i, labeled by whether a_i is a valley or a peak (a_{i+1} = n+1 past the
// last extreme). Defined for every n ≥ 1; within 1/n of U_λ.
IntervalSystem run_paintbox(const Composition& lambda);

// The paintbox permutation: values in the same up component keep arrival
// order, in the same down component reverse it, otherwise order by value.
// Throws DegenerateSample on tied values or an exact endpoint hit.
Permutation sigma_u(const IntervalSystem& u, std::span<const double> xs);

// Component lookup table for repeated sigma_u draws against one system.
class SigmaContext {
public:
    explicit SigmaContext(const IntervalSystem& u);
    Permutation apply(std::span<const double> xs) const;
    // Law of des(σ_U(k)): draws k iid uniforms per sample, resampling
    // degenerate draws (counted). Deterministic under a fixed seed.
    struct LawEstimate {
        double estimate, stderror;
        std::uint64_t samples, degenerate;
    };
    LawEstimate descent_class_probability(const Composition& mu, std::uint64_t samples,
                                          std::uint64_t seed, bool parallel = true) const;

private:
    std::vector<double> lo_, hi_;  // merged component table, sorted
    std::vector<signed char> dir_;  // +1 up, -1 down
    int component_of(double x) const;  // -1 if outside; throws on endpoint hit
};

struct XiVector {
    std::vector<double> values;        // ξ_1..ξ_k
    std::vector<RatInterval> slopes;   // rescaled slope each was drawn from
    std::vector<int> cells;            // cell of value i in the sampled filling
};

class FillingSampler;

// ξ^λ(k): sample а uniform filling, then a uniform point of the rescaled
// slope [(x(c)−1)/n, y(c)/n] of the cell c holding each value i ≤ k.
XiVector sample_xi(const Composition& lambda, int k, Rng& rng);
// Same but reusing a prebuilt sampler (hot path for experiments).
XiVector sample_xi(const Composition& lambda, const RunDecomposition& runs,
                   const FillingSampler& sampler, int k, Rng& rng);
// Deterministic-σ variant: ξ(σ) for a given filling σ of λ.
XiVector xi_for_filling(const Composition& lambda, const RunDecomposition& runs,
                        const Permutation& sigma, int k, Rng& rng);

// Monte Carlo estimate of P(des(σ_U(k)) = D_μ) from iid uniforms.
SigmaContext::LawEstimate estimate_paintbox_law(const IntervalSystem& u, const Composition& mu,
                                                std::uint64_t samples, std::uint64_t seed,
                                                bool parallel = true);

// Interval component lengths sorted decreasingly, (up, down); the pointwise
// boundary map toward the Young-lattice boundary.
std::pair<std::vector<Rational>, std::vector<Rational>> component_lengths(const IntervalSystem& u);

}  // namespace zigzag
