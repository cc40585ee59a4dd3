#pragma once

#include <cstdint>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"
#include "zigzag/paintbox.hpp"

namespace zigzag {

// f_σ: f(0) = 0 and f(i) − f(i−1) = −1 exactly when i ∈ des(σ). A word of
// length n yields f(0..n−1), one step per descent indicator.
std::vector<int> descent_walk(const Permutation& sigma);

// Eulerian numbers A(n,k) = #{σ ∈ S_n : #des(σ) = k}, exact, with the exact
// first two moments of the descent count.
class EulerianTable {
public:
    explicit EulerianTable(int max_n);
    const BigInt& value(int n, int k) const;  // 0 outside 0 ≤ k ≤ n−1
    BigInt row_sum(int n) const;
    Rational descent_mean(int n) const;      // (n−1)/2
    Rational descent_variance(int n) const;  // (n+1)/12

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

// Piecewise-linear limit profile f_U: slope +1 on up components, −1 on down
// components, 0 elsewhere; f(0) = 0. Breakpoints kept exact.
class LimitProfile {
public:
    explicit LimitProfile(const IntervalSystem& u);
    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Rational>& values() const { return values_; }
    Rational eval(const Rational& t) const;
    double eval(double t) const;

private:
    std::vector<Rational> breaks_;  // 0 = b_0 < … < b_m = 1
    std::vector<Rational> values_;  // f at each breakpoint
};

struct LlnResult {
    double mean_sup = 0.0;
    double max_sup = 0.0;
    std::vector<double> sups;  // per replicate
    std::uint64_t degenerate = 0;
};

// Rescaled-walk supremum distance sup_t |f_{σ_U(n)}(nt)/n − f_U(t)| per
// replicate, the sup evaluated on the walk grid and the profile breakpoints.
LlnResult lln_experiment(const IntervalSystem& u, int n, std::uint64_t samples, std::uint64_t seed,
                         bool parallel = true);

struct CltResult {
    double ks_to_normal = 0.0;          // standardized #Des vs N(0, 1/12)
    std::vector<double> standardized;   // (#Des − n/2)/√n per replicate
    // walk marginals f(nt)/√n at t = 1/4, 1/2, 3/4
    std::vector<double> quarter, half, three_quarter;
};

// Uniform σ_n by Fisher–Yates; returns the standardized descent counts and
// the three walk marginals.
CltResult clt_experiment(int n, std::uint64_t samples, std::uint64_t seed, bool parallel = true);

}  // namespace zigzag
