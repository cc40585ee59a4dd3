#include "zigzag/elr.hpp"

#include <stdexcept>

#include "zigzag/errors.hpp"
#include "zigzag/graph.hpp"

namespace zigzag {

namespace {

RatPoly one() { return RatPoly::constant(Rational(1)); }

RatPoly poly_pow(const RatPoly& p, int e) {
    RatPoly out = one();
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

RatPoly one_minus_t_pow(int e) { return poly_pow(RatPoly({Rational(1), Rational(-1)}), e); }

RatPoly t_pow(int e) { return RatPoly::monomial(e, Rational(1)); }

// Unnormalized density of the last chain variable: fold the chain from the
// first extreme forward, one run at a time.
RatPoly chain_forward(const RunDecomposition& rd) {
    RatPoly g = one();
    for (const RunDecomposition::Run& run : rd.runs())
        g = run.ascending ? convolve_ascending(g, run.length() - 1)
                          : convolve_descending(g, run.length() - 1);
    return g;
}

RatPoly chain_backward(const RunDecomposition& rd) {
    RatPoly h = one();
    const std::vector<RunDecomposition::Run>& runs = rd.runs();
    for (std::size_t i = runs.size(); i-- > 0;)
        h = runs[i].ascending ? convolve_descending(h, runs[i].length() - 1)
                              : convolve_ascending(h, runs[i].length() - 1);
    return h;
}

}  // namespace

ElrMarginals marginal_cdfs(const Composition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("marginal_cdfs of ∅");
    if (lambda.size() == 1) {
        // single cell: X = Y = one uniform point
        RatPoly id({Rational(0), Rational(1)});
        return {PiecewisePoly::single(id), PiecewisePoly::single(id), Rational(1)};
    }
    RunDecomposition rd(lambda);
    RatPoly g = chain_forward(rd);   // density of Y up to 1/V
    RatPoly h = chain_backward(rd);  // density of X up to 1/V
    Rational vol = g.integral_01();
    RatPoly fy = g.antiderivative().scaled(Rational(1) / vol);
    RatPoly fx = h.antiderivative().scaled(Rational(1) / vol);
    return {PiecewisePoly::single(std::move(fx)), PiecewisePoly::single(std::move(fy)), vol};
}

Rational volume(const Composition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("volume of ∅");
    if (lambda.size() == 1) return 1;
    return chain_forward(RunDecomposition(lambda)).integral_01();
}

Rational expect_leq(const Composition& lambda, const Composition& mu, ConcatMode mode) {
    ElrMarginals left = marginal_cdfs(lambda);
    ElrMarginals right = marginal_cdfs(mu);
    const RatPoly& fy = left.fy.pieces().front();
    RatPoly dx = right.fx.pieces().front().derivative();
    if (mode == ConcatMode::plus) return (fy * dx).integral_01();
    return ((one() - fy) * dx).integral_01();
}

Rational concat_volume(const Composition& lambda, const Composition& mu, ConcatMode mode) {
    if (lambda.empty() || mu.empty()) throw std::invalid_argument("concat_volume of ∅");
    return volume(lambda) * volume(mu) * expect_leq(lambda, mu, mode);
}

Rational prob_one_in_valley(const Composition& lambda, int v) {
    RunDecomposition rd(lambda);
    if (!rd.is_valley(v)) throw InvalidValley("cell " + std::to_string(v) + " is not a valley");
    const int n = lambda.size();
    RatPoly integrand = one();
    if (v > 1) integrand = integrand * (one() - marginal_cdfs(restricted(lambda, 1, v - 1)).fy.pieces().front());
    if (v < n) integrand = integrand * (one() - marginal_cdfs(restricted(lambda, v + 1, n)).fx.pieces().front());
    return Rational(1, n) / integrand.integral_01();
}

Rational prob_one_in_valley_counting(const Composition& lambda, int v) {
    RunDecomposition rd(lambda);
    if (!rd.is_valley(v)) throw InvalidValley("cell " + std::to_string(v) + " is not a valley");
    const int n = lambda.size();
    std::vector<BigInt> pre = prefix_filling_counts(lambda);
    std::vector<BigInt> suf = suffix_filling_counts(lambda);
    BigInt num = factorial(n - 1) * pre[static_cast<std::size_t>(v - 1)] * suf[static_cast<std::size_t>(v)];
    BigInt den = factorial(v - 1) * factorial(n - v) * count_fillings(lambda);
    return Rational(num, den);
}

std::pair<PiecewisePoly, PiecewisePoly> run_cdf_bounds(const Composition& lambda) {
    if (lambda.empty() || lambda.size() == 1) throw NotApplicable("needs at least two runs");
    RunDecomposition rd(lambda);
    if (rd.runs().size() < 2) throw NotApplicable("needs at least two runs");
    const RunDecomposition::Run& first = rd.runs().front();
    const int r = first.length();
    RatPoly lower, upper;
    if (first.ascending) {
        lower = one() - one_minus_t_pow(r);
        upper = one() - one_minus_t_pow(r + 1);
    } else {
        lower = t_pow(r + 1);
        upper = t_pow(r);
    }
    return {PiecewisePoly::single(std::move(lower)), PiecewisePoly::single(std::move(upper))};
}

Rational delta_exact(const Composition& lambda, const Composition& mu) {
    RatPoly fy = marginal_cdfs(lambda).fy.pieces().front();
    RatPoly fx = marginal_cdfs(mu).fx.pieces().front();
    return ((one() - fy) * (one() - fx)).integral_01();
}

std::pair<Rational, Rational> delta_bounds(int last_cells, int first_cells, RunDir dir_last,
                                           RunDir dir_first) {
    if (last_cells < 1 || first_cells < 1) throw std::invalid_argument("run sizes must be ≥ 1");
    const int l = last_cells, r = first_cells;
    auto rat = [](const BigInt& num, const BigInt& den) { return Rational(num, den); };
    if (dir_last == RunDir::dec && dir_first == RunDir::inc)
        return {Rational(1, l + r + 1), Rational(1, l + r - 1)};
    if (dir_last == RunDir::inc && dir_first == RunDir::dec)
        return {Rational(1) - Rational(1, l) - Rational(1, r) + Rational(1, l + r - 1),
                Rational(1) - Rational(1, l + 1) - Rational(1, r + 1) + Rational(1, l + r + 1)};
    if (dir_last == RunDir::inc && dir_first == RunDir::inc) {
        // ∫(1−t^{l−1})(1−t)^r and ∫(1−t^{l})(1−t)^{r−1}
        Rational lower = Rational(1, r + 1) - rat(factorial(l - 1) * factorial(r), factorial(l + r));
        Rational upper = Rational(1, r) - rat(factorial(l) * factorial(r - 1), factorial(l + r));
        return {lower, upper};
    }
    // dec/dec mirrors inc/inc with the roles of the runs swapped
    Rational lower = Rational(1, l + 1) - rat(factorial(r - 1) * factorial(l), factorial(l + r));
    Rational upper = Rational(1, l) - rat(factorial(r) * factorial(l - 1), factorial(l + r));
    return {lower, upper};
}

Rational valley_window_bound(const Composition& lambda, int a, int b) {
    RunDecomposition rd(lambda);
    if (!rd.is_peak(a) || !rd.is_peak(b) || !(a < b))
        throw std::invalid_argument("window endpoints must be peaks a < b");
    return Rational(2 * (b - a), lambda.size());
}

Rational window_probability(const Composition& lambda, int a, int b) {
    RunDecomposition rd(lambda);
    if (!rd.is_peak(a) || !rd.is_peak(b) || !(a < b))
        throw std::invalid_argument("window endpoints must be peaks a < b");
    Rational acc = 0;
    for (int v : rd.valleys())
        if (v > a && v < b) acc += prob_one_in_valley(lambda, v);
    return acc;
}

}  // namespace zigzag
