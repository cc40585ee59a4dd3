#pragma once

#include <utility>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"
#include "zigzag/polynomial.hpp"

namespace zigzag {

// Exact chain model for a ribbon: the endpoint pair (X_λ, Y_λ) has density
// proportional to the alternating-inequality chain over the extreme cells,
// each run of length l contributing |x_i − x_{i+1}|^{l−1}/(l−1)!.
struct ElrMarginals {
    PiecewisePoly fx, fy;  // CDFs of X_λ (first extreme) and Y_λ (last extreme)
    Rational volume;       // V_λ, with n!·V_λ = d(λ)
};

ElrMarginals marginal_cdfs(const Composition& lambda);

// V_λ alone (same chain, no CDF assembly).
Rational volume(const Composition& lambda);

// E(Y_λ ≤_ε X_μ) with the two sides independent; ≤_+ is ≤ and ≤_− is ≥.
Rational expect_leq(const Composition& lambda, const Composition& mu, ConcatMode mode);

// V_{λεμ} = V_λ · V_μ · E(Y_λ ≤_ε X_μ).
Rational concat_volume(const Composition& lambda, const Composition& mu, ConcatMode mode);

// P_λ(1 ∈ v) = (1/n) / ∫_0^1 (1−F_{Y_{λ<v}})(1−F_{X_{λ>v}}) dt, with the
// empty side contributing the constant 1 (Dirac-at-one convention).
Rational prob_one_in_valley(const Composition& lambda, int v);

// Same probability by the path-counting identity
// ((n−1)!/(|λ<v|!|λ>v|!))·d(λ<v)d(λ>v)/d(λ); independent route kept for
// cross-checking the integral formula.
Rational prob_one_in_valley_counting(const Composition& lambda, int v);

// Polynomial envelope of F_X from the first run: increasing run of length R
// gives 1−(1−t)^R ≤ F_X ≤ 1−(1−t)^{R+1}, decreasing gives t^{R+1} ≤ F_X ≤ t^R.
// Throws NotApplicable when λ has fewer than two runs.
std::pair<PiecewisePoly, PiecewisePoly> run_cdf_bounds(const Composition& lambda);

// Δ = ∫_0^1 (1−F_{Y_λ}(t))(1−F_{X_μ}(t)) dt, exact.
Rational delta_exact(const Composition& lambda, const Composition& mu);

enum class RunDir { inc, dec };

// Closed-form envelope [lower, upper] for Δ given only the sizes (in cells)
// of λ's last run and μ's first run and their directions. Obtained by
// integrating the run envelopes of F_Y and F_X.
std::pair<Rational, Rational> delta_bounds(int last_cells, int first_cells, RunDir dir_last,
                                           RunDir dir_first);

// 2(b−a)/n for peaks a < b of λ; P_λ(1 ∈ λ_{>a,<b}) never exceeds it.
Rational valley_window_bound(const Composition& lambda, int a, int b);

// Exact P_λ(1 ∈ λ_{>a,<b}) as the sum over valleys strictly between a and b.
Rational window_probability(const Composition& lambda, int a, int b);

}  // namespace zigzag
