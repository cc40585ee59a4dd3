#include "zigzag/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zigzag/errors.hpp"
#include "zigzag/parallel.hpp"
#include "zigzag/stats.hpp"

namespace zigzag {

std::vector<int> descent_walk(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> f(static_cast<std::size_t>(n));
    f[0] = 0;
    for (int i = 1; i < n; ++i)
        f[static_cast<std::size_t>(i)] =
            f[static_cast<std::size_t>(i - 1)] + (sigma(i + 1) < sigma(i) ? -1 : 1);
    return f;
}

EulerianTable::EulerianTable(int max_n) : max_n_(max_n), zero_(0) {
    if (max_n < 1) throw std::invalid_argument("EulerianTable needs max_n ≥ 1");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[1] = {BigInt(1)};
    for (int n = 2; n <= max_n; ++n) {
        rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), BigInt(0));
        for (int k = 0; k < n; ++k) {
            const BigInt& same = k < n - 1 ? rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : zero_;
            const BigInt& prev = k > 0 ? rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] : zero_;
            rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                BigInt(k + 1) * same + BigInt(n - k) * prev;
        }
    }
}

const BigInt& EulerianTable::value(int n, int k) const {
    if (n < 1 || n > max_n_ || k < 0 || k >= n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt EulerianTable::row_sum(int n) const {
    BigInt acc = 0;
    for (int k = 0; k < n; ++k) acc += value(n, k);
    return acc;
}

Rational EulerianTable::descent_mean(int n) const {
    BigInt weighted = 0;
    for (int k = 0; k < n; ++k) weighted += BigInt(k) * value(n, k);
    return Rational(weighted, factorial(n));
}

Rational EulerianTable::descent_variance(int n) const {
    BigInt second = 0;
    for (int k = 0; k < n; ++k) second += BigInt(k) * BigInt(k) * value(n, k);
    Rational mean = descent_mean(n);
    return Rational(second, factorial(n)) - mean * mean;
}

LimitProfile::LimitProfile(const IntervalSystem& u) {
    struct Edge {
        Rational at;
        int slope;  // slope to the right of `at` until the next breakpoint
    };
    std::vector<std::pair<RatInterval, int>> comps;
    for (const RatInterval& iv : u.up()) comps.emplace_back(iv, +1);
    for (const RatInterval& iv : u.down()) comps.emplace_back(iv, -1);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    breaks_.push_back(Rational(0));
    values_.push_back(Rational(0));
    Rational cursor = 0;
    Rational value = 0;
    for (const auto& [iv, slope] : comps) {
        if (iv.lo > cursor) {
            breaks_.push_back(iv.lo);
            values_.push_back(value);  // flat gap
        }
        value += Rational(slope) * (iv.hi - iv.lo);
        breaks_.push_back(iv.hi);
        values_.push_back(value);
        cursor = iv.hi;
    }
    if (breaks_.back() != 1) {
        breaks_.push_back(Rational(1));
        values_.push_back(value);
    }
}

Rational LimitProfile::eval(const Rational& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("profile evaluated outside [0,1]");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    if (it == breaks_.end()) return values_.back();
    std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    if (j == 0) return values_.front();
    const Rational& b0 = breaks_[j - 1];
    const Rational& b1 = breaks_[j];
    const Rational& v0 = values_[j - 1];
    const Rational& v1 = values_[j];
    return v0 + (v1 - v0) * (t - b0) / (b1 - b0);
}

double LimitProfile::eval(double t) const {
    t = std::min(std::max(t, 0.0), 1.0);
    return to_double(eval(Rational(t)));  // double → rational is exact
}

LlnResult lln_experiment(const IntervalSystem& u, int n, std::uint64_t samples, std::uint64_t seed,
                         bool parallel) {
    if (n < 1 || samples == 0) throw std::invalid_argument("lln_experiment: need n ≥ 1, samples ≥ 1");
    const SigmaContext ctx(u);
    const LimitProfile profile(u);
    // profile values at the walk grid i/n, plus the profile breakpoints
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = to_double(profile.eval(Rational(i, n)));
    std::vector<std::pair<double, Rational>> break_pts;  // (t as double, f_U(t))
    for (std::size_t j = 0; j < profile.breakpoints().size(); ++j) {
        const Rational& b = profile.breakpoints()[j];
        if (b * n >= n - 1) continue;  // walk grid ends at (n−1)/n
        break_pts.emplace_back(to_double(b), profile.values()[j]);
    }

    struct Block {
        std::vector<double> sups;
        std::uint64_t degenerate = 0;
    };
    const std::uint64_t nb = block_count(samples, kPathBlockSize);
    std::vector<Block> blocks = map_blocks<Block>(
        nb,
        [&](std::uint64_t b) {
            Rng rng = Rng::derived(seed, b);
            Block out;
            std::vector<double> xs(static_cast<std::size_t>(n));
            const std::uint64_t m = block_size_at(b, samples, kPathBlockSize);
            for (std::uint64_t s = 0; s < m; ++s) {
                Permutation sigma = [&] {
                    for (;;) {
                        for (double& x : xs) x = rng.unit();
                        try {
                            return ctx.apply(xs);
                        } catch (const DegenerateSample&) {
                            ++out.degenerate;
                        }
                    }
                }();
                std::vector<int> f = descent_walk(sigma);
                double sup = 0.0;
                for (int i = 0; i < n; ++i)
                    sup = std::max(sup, std::abs(static_cast<double>(f[static_cast<std::size_t>(i)]) / n -
                                                 grid[static_cast<std::size_t>(i)]));
                for (const auto& [t, ft] : break_pts) {
                    // walk linearly interpolated at nt
                    double pos = t * n;
                    int i0 = static_cast<int>(pos);
                    double frac = pos - i0;
                    double walk = f[static_cast<std::size_t>(i0)] * (1.0 - frac) +
                                  f[static_cast<std::size_t>(std::min(i0 + 1, n - 1))] * frac;
                    sup = std::max(sup, std::abs(walk / n - to_double(ft)));
                }
                out.sups.push_back(sup);
            }
            return out;
        },
        parallel);
    LlnResult out;
    for (const Block& b : blocks) {
        out.sups.insert(out.sups.end(), b.sups.begin(), b.sups.end());
        out.degenerate += b.degenerate;
    }
    out.mean_sup = mean_of(out.sups);
    out.max_sup = *std::max_element(out.sups.begin(), out.sups.end());
    return out;
}

CltResult clt_experiment(int n, std::uint64_t samples, std::uint64_t seed, bool parallel) {
    if (n < 2 || samples == 0) throw std::invalid_argument("clt_experiment: need n ≥ 2, samples ≥ 1");
    struct Block {
        std::vector<double> standardized, quarter, half, three_quarter;
    };
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const std::uint64_t nb = block_count(samples, kWalkBlockSize);
    std::vector<Block> blocks = map_blocks<Block>(
        nb,
        [&](std::uint64_t b) {
            Rng rng = Rng::derived(seed, b);
            Block out;
            std::vector<int> word(static_cast<std::size_t>(n));
            const std::uint64_t m = block_size_at(b, samples, kWalkBlockSize);
            for (std::uint64_t s = 0; s < m; ++s) {
                for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
                for (int i = n - 1; i > 0; --i)
                    std::swap(word[static_cast<std::size_t>(i)],
                              word[rng.below(static_cast<std::uint64_t>(i) + 1)]);
                int walk = 0, descents = 0;
                int q1 = 0, q2 = 0, q3 = 0;
                for (int i = 1; i < n; ++i) {
                    if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(i - 1)]) {
                        --walk;
                        ++descents;
                    } else {
                        ++walk;
                    }
                    if (i == n / 4) q1 = walk;
                    if (i == n / 2) q2 = walk;
                    if (i == 3 * n / 4) q3 = walk;
                }
                out.standardized.push_back((descents - 0.5 * n) / sqrt_n);
                out.quarter.push_back(q1 / sqrt_n);
                out.half.push_back(q2 / sqrt_n);
                out.three_quarter.push_back(q3 / sqrt_n);
            }
            return out;
        },
        parallel);
    CltResult out;
    for (const Block& b : blocks) {
        out.standardized.insert(out.standardized.end(), b.standardized.begin(), b.standardized.end());
        out.quarter.insert(out.quarter.end(), b.quarter.begin(), b.quarter.end());
        out.half.insert(out.half.end(), b.half.begin(), b.half.end());
        out.three_quarter.insert(out.three_quarter.end(), b.three_quarter.begin(), b.three_quarter.end());
    }
    out.ks_to_normal =
        ks_distance(out.standardized, [](double x) { return normal_cdf(x, 0.0, 1.0 / 12.0); });
    return out;
}

}  // namespace zigzag
