#include "zigzag/paintbox.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zigzag/errors.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/parallel.hpp"

namespace zigzag {

namespace {

std::vector<RatInterval> parse_intervals(const std::string& text) {
    std::vector<RatInterval> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("interval '" + pair + "' needs two endpoints");
        out.push_back(RatInterval{parse_rational(pair.substr(0, comma)),
                                  parse_rational(pair.substr(comma + 1))});
    }
    return out;
}

std::string intervals_string(const std::vector<RatInterval>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += rational_string(v[i].lo) + "," + rational_string(v[i].hi);
    }
    return out;
}

}  // namespace

IntervalSystem::IntervalSystem(std::vector<RatInterval> up, std::vector<RatInterval> down)
    : up_(std::move(up)), down_(std::move(down)) {
    auto order = [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; };
    std::sort(up_.begin(), up_.end(), order);
    std::sort(down_.begin(), down_.end(), order);
    std::vector<std::pair<RatInterval, int>> all;
    for (const RatInterval& i : up_) all.emplace_back(i, +1);
    for (const RatInterval& i : down_) all.emplace_back(i, -1);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (std::size_t i = 0; i < all.size(); ++i) {
        const RatInterval& iv = all[i].first;
        if (!(iv.lo >= 0 && iv.hi <= 1 && iv.lo < iv.hi))
            throw std::invalid_argument("interval must satisfy 0 ≤ lo < hi ≤ 1");
        if (i > 0 && iv.lo < all[i - 1].first.hi)
            throw std::invalid_argument("intervals must be pairwise disjoint");
    }
}

IntervalSystem IntervalSystem::parse(const std::string& up, const std::string& down) {
    return IntervalSystem(parse_intervals(up), parse_intervals(down));
}

std::string IntervalSystem::up_string() const { return intervals_string(up_); }
std::string IntervalSystem::down_string() const { return intervals_string(down_); }

namespace {

struct ClosedIv {
    Rational lo, hi;  // lo ≤ hi, degenerate allowed
};

// Complement of a sorted disjoint union of open intervals, inside [0,1].
std::vector<ClosedIv> complement(const std::vector<RatInterval>& open) {
    std::vector<ClosedIv> out;
    Rational cursor = 0;
    for (const RatInterval& iv : open) {
        out.push_back(ClosedIv{cursor, iv.lo});
        cursor = iv.hi;
    }
    out.push_back(ClosedIv{cursor, Rational(1)});
    return out;
}

Rational point_distance(const Rational& x, const std::vector<ClosedIv>& b) {
    Rational best = -1;
    for (const ClosedIv& iv : b) {
        Rational d;
        if (x < iv.lo)
            d = iv.lo - x;
        else if (x > iv.hi)
            d = x - iv.hi;
        else
            return Rational(0);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

bool contains_point(const std::vector<ClosedIv>& a, const Rational& x) {
    for (const ClosedIv& iv : a)
        if (x >= iv.lo && x <= iv.hi) return true;
    return false;
}

// sup_{a∈A} dist(a, B). The distance-to-B function is piecewise linear with
// peaks at the midpoints of B's gaps, so the sup over the closed set A is
// attained at an endpoint of A or at such a midpoint inside A.
Rational directed_hausdorff(const std::vector<ClosedIv>& a, const std::vector<ClosedIv>& b) {
    Rational best = 0;
    auto consider = [&](const Rational& x) {
        Rational d = point_distance(x, b);
        if (d > best) best = d;
    };
    for (const ClosedIv& iv : a) {
        consider(iv.lo);
        consider(iv.hi);
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        Rational mid = (b[i].hi + b[i + 1].lo) / 2;
        if (contains_point(a, mid)) consider(mid);
    }
    return best;
}

Rational hausdorff(const std::vector<ClosedIv>& a, const std::vector<ClosedIv>& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace

Rational paintbox_distance(const IntervalSystem& u, const IntervalSystem& v) {
    return std::max(hausdorff(complement(u.up()), complement(v.up())),
                    hausdorff(complement(u.down()), complement(v.down())));
}

IntervalSystem composition_paintbox(const Composition& lambda) {
    const int n = lambda.size();
    if (n < 2) throw UndefinedPaintbox("U_λ needs |λ| ≥ 2");
    std::vector<RatInterval> up, down;
    int s = 1;
    while (s <= n - 1) {
        bool desc = lambda.is_descent(s);
        int e = s;
        while (e + 1 <= n - 1 && lambda.is_descent(e + 1) == desc) ++e;
        // interior of I_s ∪ … ∪ I_e
        RatInterval iv{Rational(s - 1, n - 1), Rational(e, n - 1)};
        (desc ? down : up).push_back(iv);
        s = e + 1;
    }
    return IntervalSystem(std::move(up), std::move(down));
}

IntervalSystem run_paintbox(const Composition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("run paintbox of ∅");
    const int n = lambda.size();
    RunDecomposition rd(lambda);
    std::vector<RatInterval> up, down;
    const std::vector<int>& ext = rd.extremes();
    for (std::size_t i = 0; i < ext.size(); ++i) {
        int a = ext[i];
        int b = i + 1 < ext.size() ? ext[i + 1] : n + 1;
        if (b == a) continue;
        RatInterval iv{Rational(a - 1, n), Rational(b - 1, n)};
        (rd.is_valley(a) ? up : down).push_back(iv);
    }
    return IntervalSystem(std::move(up), std::move(down));
}

SigmaContext::SigmaContext(const IntervalSystem& u) {
    std::vector<std::pair<RatInterval, signed char>> all;
    for (const RatInterval& iv : u.up()) all.emplace_back(iv, +1);
    for (const RatInterval& iv : u.down()) all.emplace_back(iv, -1);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (const auto& [iv, d] : all) {
        lo_.push_back(to_double(iv.lo));
        hi_.push_back(to_double(iv.hi));
        dir_.push_back(d);
    }
}

int SigmaContext::component_of(double x) const {
    auto it = std::upper_bound(lo_.begin(), lo_.end(), x);
    if (it == lo_.begin()) return -1;
    std::size_t c = static_cast<std::size_t>(it - lo_.begin()) - 1;
    if (x == lo_[c] || x == hi_[c]) throw DegenerateSample("endpoint hit");
    return x < hi_[c] ? static_cast<int>(c) : -1;
}

Permutation SigmaContext::apply(std::span<const double> xs) const {
    const int k = static_cast<int>(xs.size());
    std::vector<int> values(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    {
        std::vector<double> sorted(xs.begin(), xs.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DegenerateSample("tied sample values");
    }
    std::vector<int> comp(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comp[static_cast<std::size_t>(i)] = component_of(xs[static_cast<std::size_t>(i)]);
    // order of the values along the final word
    std::sort(values.begin(), values.end(), [&](int i, int j) {
        int ci = comp[static_cast<std::size_t>(i - 1)];
        int cj = comp[static_cast<std::size_t>(j - 1)];
        if (ci >= 0 && ci == cj) return dir_[static_cast<std::size_t>(ci)] > 0 ? i < j : j < i;
        return xs[static_cast<std::size_t>(i - 1)] < xs[static_cast<std::size_t>(j - 1)];
    });
    return Permutation(std::move(values));
}

Permutation sigma_u(const IntervalSystem& u, std::span<const double> xs) {
    return SigmaContext(u).apply(xs);
}

SigmaContext::LawEstimate SigmaContext::descent_class_probability(const Composition& mu,
                                                                  std::uint64_t samples,
                                                                  std::uint64_t seed,
                                                                  bool parallel) const {
    if (mu.empty() || samples == 0)
        throw std::invalid_argument("descent_class_probability: need |μ| ≥ 1, samples ≥ 1");
    const int k = mu.size();
    struct Block {
        std::uint64_t hits = 0, degenerate = 0;
    };
    const std::uint64_t nb = block_count(samples);
    std::vector<Block> blocks = map_blocks<Block>(
        nb,
        [&](std::uint64_t b) {
            Rng rng = Rng::derived(seed, b);
            Block out;
            std::vector<double> xs(static_cast<std::size_t>(k));
            const std::uint64_t m = block_size_at(b, samples);
            for (std::uint64_t s = 0; s < m; ++s) {
                for (;;) {
                    for (double& x : xs) x = rng.unit();
                    try {
                        if (apply(xs).descent_composition() == mu) ++out.hits;
                        break;
                    } catch (const DegenerateSample&) {
                        ++out.degenerate;
                    }
                }
            }
            return out;
        },
        parallel);
    std::uint64_t hits = 0, degenerate = 0;
    for (const Block& b : blocks) {
        hits += b.hits;
        degenerate += b.degenerate;
    }
    const double freq = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(samples));
    return {freq, se, samples, degenerate};
}

SigmaContext::LawEstimate estimate_paintbox_law(const IntervalSystem& u, const Composition& mu,
                                                std::uint64_t samples, std::uint64_t seed,
                                                bool parallel) {
    return SigmaContext(u).descent_class_probability(mu, samples, seed, parallel);
}

namespace {

XiVector xi_from_cells(const RunDecomposition& runs, const std::vector<int>& cells, Rng& rng) {
    const int n = runs.size();
    XiVector out;
    out.cells = cells;
    for (int cell : cells) {
        RunDecomposition::Slope s = runs.slope(cell);
        RatInterval iv{Rational(s.lo - 1, n), Rational(s.hi, n)};
        const double lo = to_double(iv.lo);
        const double hi = to_double(iv.hi);
        out.values.push_back(lo + rng.unit() * (hi - lo));
        out.slopes.push_back(iv);
    }
    return out;
}

}  // namespace

XiVector sample_xi(const Composition& lambda, const RunDecomposition& runs,
                   const FillingSampler& sampler, int k, Rng& rng) {
    if (k < 1 || k > lambda.size()) throw std::invalid_argument("sample_xi: k outside [1,n]");
    return xi_from_cells(runs, sampler.sample_low_cells(k, rng), rng);
}

XiVector sample_xi(const Composition& lambda, int k, Rng& rng) {
    RunDecomposition runs(lambda);
    FillingSampler sampler(lambda);
    return sample_xi(lambda, runs, sampler, k, rng);
}

XiVector xi_for_filling(const Composition& lambda, const RunDecomposition& runs,
                        const Permutation& sigma, int k, Rng& rng) {
    if (sigma.size() != lambda.size()) throw std::invalid_argument("filling size mismatch");
    std::vector<int> inv = sigma.inverse_word();
    std::vector<int> cells(inv.begin(), inv.begin() + k);
    return xi_from_cells(runs, cells, rng);
}

std::pair<std::vector<Rational>, std::vector<Rational>> component_lengths(const IntervalSystem& u) {
    std::vector<Rational> up, down;
    for (const RatInterval& iv : u.up()) up.push_back(iv.hi - iv.lo);
    for (const RatInterval& iv : u.down()) down.push_back(iv.hi - iv.lo);
    std::sort(up.rbegin(), up.rend());
    std::sort(down.rbegin(), down.rend());
    return {up, down};
}

}  // namespace zigzag
