#include "zigzag/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zigzag/errors.hpp"
#include "zigzag/parallel.hpp"

namespace zigzag {

namespace {

constexpr int kPathDpMaxSize = 22;  // 2^21 frontier states

std::uint32_t descent_mask(const Composition& c) {
    std::uint32_t m = 0;
    for (int d : c.descents()) m |= 1u << (d - 1);
    return m;
}

Composition from_mask(int n, std::uint32_t mask) {
    std::vector<int> descents;
    for (int d = 1; d < n; ++d)
        if (mask & (1u << (d - 1))) descents.push_back(d);
    return Composition::from_descents(descents, n);
}

void dedup(std::vector<Composition>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Composition> covers(const Composition& mu) {
    if (mu.empty()) return {Composition({1})};
    const std::vector<int>& parts = mu.parts();
    std::vector<Composition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<int> grown = parts;
        ++grown[i];
        out.emplace_back(std::move(grown));
    }
    // split part j into (a, b) with a + b = part + 1
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (int a = 1; a <= parts[j]; ++a) {
            std::vector<int> split;
            split.reserve(parts.size() + 1);
            split.insert(split.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(j));
            split.push_back(a);
            split.push_back(parts[j] + 1 - a);
            split.insert(split.end(), parts.begin() + static_cast<std::ptrdiff_t>(j) + 1, parts.end());
            out.emplace_back(std::move(split));
        }
    }
    dedup(out);
    return out;
}

std::vector<Composition> parents(const Composition& lambda) {
    if (lambda.empty()) return {};
    const std::vector<int>& parts = lambda.parts();
    if (lambda.size() == 1) return {Composition()};
    std::vector<Composition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 2) continue;
        std::vector<int> shrunk = parts;
        --shrunk[i];
        out.emplace_back(std::move(shrunk));
    }
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        std::vector<int> merged;
        merged.reserve(parts.size() - 1);
        merged.insert(merged.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(j));
        merged.push_back(parts[j] + parts[j + 1] - 1);
        merged.insert(merged.end(), parts.begin() + static_cast<std::ptrdiff_t>(j) + 2, parts.end());
        out.emplace_back(std::move(merged));
    }
    dedup(out);
    return out;
}

BigInt count_fillings(const Composition& lambda) {
    if (lambda.empty()) return 1;
    const int n = lambda.size();
    std::vector<BigInt> row = {1};
    for (int i = 2; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i));
        if (lambda.is_descent(i - 1)) {
            BigInt acc = 0;  // next[r] = sum of row[r-1 ..]
            for (int r = i - 1; r >= 1; --r) {
                acc += row[static_cast<std::size_t>(r - 1)];
                next[static_cast<std::size_t>(r - 1)] = acc;
            }
            next[static_cast<std::size_t>(i - 1)] = 0;
        } else {
            BigInt acc = 0;  // next[r] = sum of row[.. r-2]
            for (int r = 1; r <= i; ++r) {
                next[static_cast<std::size_t>(r - 1)] = acc;
                if (r <= i - 1) acc += row[static_cast<std::size_t>(r - 1)];
            }
        }
        row.swap(next);
    }
    BigInt total = 0;
    for (const BigInt& x : row) total += x;
    return total;
}

std::vector<BigInt> prefix_filling_counts(const Composition& lambda) {
    const int n = lambda.size();
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1;
    if (n == 0) return out;
    std::vector<BigInt> row = {1};
    out[1] = 1;
    for (int i = 2; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i));
        if (lambda.is_descent(i - 1)) {
            BigInt acc = 0;
            for (int r = i - 1; r >= 1; --r) {
                acc += row[static_cast<std::size_t>(r - 1)];
                next[static_cast<std::size_t>(r - 1)] = acc;
            }
        } else {
            BigInt acc = 0;
            for (int r = 1; r <= i; ++r) {
                next[static_cast<std::size_t>(r - 1)] = acc;
                if (r <= i - 1) acc += row[static_cast<std::size_t>(r - 1)];
            }
        }
        row.swap(next);
        BigInt total = 0;
        for (const BigInt& x : row) total += x;
        out[static_cast<std::size_t>(i)] = total;
    }
    return out;
}

std::vector<BigInt> suffix_filling_counts(const Composition& lambda) {
    const int n = lambda.size();
    // Reading the ribbon backwards maps descents to ascents, so the suffix
    // counts of λ are the prefix counts of the reversed-complement ribbon.
    std::vector<int> descents;
    for (int i = 1; i < n; ++i)
        if (!lambda.is_descent(i)) descents.push_back(n - i);
    std::sort(descents.begin(), descents.end());
    std::vector<BigInt> pre =
        prefix_filling_counts(n == 0 ? Composition() : Composition::from_descents(descents, n));
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = pre[static_cast<std::size_t>(n - i)];
    return out;
}

std::map<Composition, BigInt> path_counts_to(const Composition& lambda, int k) {
    const int n = lambda.size();
    if (k < 0 || k > n) return {};
    if (n > kPathDpMaxSize)
        throw BoundExceeded("exact path counting limited to |λ| ≤ " + std::to_string(kPathDpMaxSize));
    if (k == n) return {{lambda, BigInt(1)}};
    const bool want_root = (k == 0);
    const int stop = want_root ? 1 : k;

    std::vector<BigInt> cur(std::size_t(1) << (n - 1));
    cur[descent_mask(lambda)] = 1;
    for (int m = n; m > stop; --m) {
        std::vector<BigInt> nxt(std::size_t(1) << (m - 2));
        std::vector<std::uint32_t> pmasks;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (m - 1)); ++mask) {
            const BigInt& val = cur[mask];
            if (val == 0) continue;
            Composition nu = from_mask(m, mask);
            pmasks.clear();
            for (const Composition& pi : parents(nu)) pmasks.push_back(descent_mask(pi));
            for (std::uint32_t pm : pmasks) nxt[pm] += val;
        }
        cur.swap(nxt);
    }
    std::map<Composition, BigInt> out;
    if (want_root) {
        // every path to level 1 extends uniquely down to the root
        BigInt total = 0;
        for (const BigInt& x : cur) total += x;
        out[Composition()] = total;
        return out;
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (stop - 1)); ++mask)
        if (cur[mask] != 0) out[from_mask(stop, mask)] = cur[mask];
    return out;
}

BigInt count_paths(const Composition& mu, const Composition& lambda) {
    if (mu.size() > lambda.size()) return 0;
    if (mu.size() == lambda.size()) return mu == lambda ? 1 : 0;
    auto counts = path_counts_to(lambda, mu.size());
    auto it = counts.find(mu);
    return it == counts.end() ? BigInt(0) : it->second;
}

KernelValue martin_kernel(const Composition& mu, const Composition& lambda) {
    if (mu.empty()) throw std::invalid_argument("martin_kernel requires |μ| ≥ 1");
    return KernelValue{count_paths(mu, lambda), count_fillings(lambda)};
}

FillingSampler::FillingSampler(const Composition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("cannot sample fillings of ∅");
    n_ = lambda.size();
    desc_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int d : lambda.descents()) desc_[static_cast<std::size_t>(d)] = 1;

    cum_.resize(static_cast<std::size_t>(n_));
    std::vector<double> row = {1.0};
    cum_[0] = {1.0};
    for (int i = 2; i <= n_; ++i) {
        std::vector<double> next(static_cast<std::size_t>(i), 0.0);
        if (desc_[static_cast<std::size_t>(i - 1)]) {
            double acc = 0.0;
            for (int r = i - 1; r >= 1; --r) {
                acc += row[static_cast<std::size_t>(r - 1)];
                next[static_cast<std::size_t>(r - 1)] = acc;
            }
        } else {
            double acc = 0.0;
            for (int r = 1; r <= i; ++r) {
                next[static_cast<std::size_t>(r - 1)] = acc;
                if (r <= i - 1) acc += row[static_cast<std::size_t>(r - 1)];
            }
        }
        double total = 0.0;
        for (double x : next) total += x;
        for (double& x : next) x /= total;  // only within-row ratios matter
        std::vector<double>& cum = cum_[static_cast<std::size_t>(i - 1)];
        cum.resize(static_cast<std::size_t>(i));
        double run = 0.0;
        for (int r = 0; r < i; ++r) {
            run += next[static_cast<std::size_t>(r)];
            cum[static_cast<std::size_t>(r)] = run;
        }
        row.swap(next);
    }
}

void FillingSampler::draw_ranks(Rng& rng, std::vector<int>& ranks) const {
    ranks.resize(static_cast<std::size_t>(n_));
    // backward pass: rank of the value in the last cell first
    {
        const std::vector<double>& cum = cum_[static_cast<std::size_t>(n_ - 1)];
        double u = rng.unit() * cum.back();
        int r = 1 + static_cast<int>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
        ranks[static_cast<std::size_t>(n_ - 1)] = std::min(r, n_);
    }
    for (int i = n_ - 1; i >= 1; --i) {
        const std::vector<double>& cum = cum_[static_cast<std::size_t>(i - 1)];
        int r_next = ranks[static_cast<std::size_t>(i)];
        int lo, hi;  // admissible ranks at row i, inclusive
        if (desc_[static_cast<std::size_t>(i)]) {
            lo = r_next;
            hi = i;
        } else {
            lo = 1;
            hi = r_next - 1;
        }
        const double base = lo > 1 ? cum[static_cast<std::size_t>(lo - 2)] : 0.0;
        const double mass = cum[static_cast<std::size_t>(hi - 1)] - base;
        double u = base + rng.unit() * mass;
        auto it = std::upper_bound(cum.begin() + (lo - 1), cum.begin() + hi, u);
        int r = 1 + static_cast<int>(it - cum.begin());
        ranks[static_cast<std::size_t>(i - 1)] = std::min(std::max(r, lo), hi);
    }
}

namespace {

// Fenwick tree over free slots with binary-lifted select.
class SlotTree {
public:
    explicit SlotTree(int n) : n_(n), t_(static_cast<std::size_t>(n) + 1, 0) {
        for (int i = 1; i <= n; ++i) t_[static_cast<std::size_t>(i)] = i & (-i);
        log_ = 1;
        while ((1 << log_) <= n) ++log_;
    }

    // Position of the k-th free slot (1-based); marks it taken.
    int take_kth(int k) {
        int pos = 0;
        for (int pw = 1 << log_; pw > 0; pw >>= 1) {
            if (pos + pw <= n_ && t_[static_cast<std::size_t>(pos + pw)] < k) {
                pos += pw;
                k -= t_[static_cast<std::size_t>(pos)];
            }
        }
        ++pos;
        for (int i = pos; i <= n_; i += i & (-i)) --t_[static_cast<std::size_t>(i)];
        return pos;
    }

private:
    int n_;
    int log_;
    std::vector<int> t_;
};

}  // namespace

Permutation FillingSampler::sample(Rng& rng) const {
    std::vector<int> ranks;
    draw_ranks(rng, ranks);
    SlotTree slots(n_);
    std::vector<int> word(static_cast<std::size_t>(n_));
    // Inserting position j at rank r_j shifts nothing that was placed later,
    // so scanning j = n..1 the value at position j is the r_j-th free slot.
    for (int j = n_; j >= 1; --j)
        word[static_cast<std::size_t>(j - 1)] = slots.take_kth(ranks[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(word));
}

std::vector<int> FillingSampler::sample_low_cells(int k, Rng& rng) const {
    if (k < 1 || k > n_) throw std::invalid_argument("sample_low_cells: k outside [1,n]");
    std::vector<int> ranks;
    draw_ranks(rng, ranks);
    SlotTree slots(n_);
    std::vector<int> cells(static_cast<std::size_t>(k), 0);
    for (int j = n_; j >= 1; --j) {
        int value = slots.take_kth(ranks[static_cast<std::size_t>(j - 1)]);
        if (value <= k) cells[static_cast<std::size_t>(value - 1)] = j;
    }
    return cells;
}

Permutation sample_uniform_filling(const Composition& lambda, Rng& rng) {
    return FillingSampler(lambda).sample(rng);
}

Composition projected_descents(const std::vector<int>& low_cells) {
    const int k = static_cast<int>(low_cells.size());
    std::vector<std::pair<int, int>> by_cell;  // (cell, value)
    by_cell.reserve(low_cells.size());
    for (int v = 1; v <= k; ++v) by_cell.emplace_back(low_cells[static_cast<std::size_t>(v - 1)], v);
    std::sort(by_cell.begin(), by_cell.end());
    std::vector<int> descents;
    for (int i = 1; i < k; ++i)
        if (by_cell[static_cast<std::size_t>(i)].second < by_cell[static_cast<std::size_t>(i - 1)].second)
            descents.push_back(i);
    return Composition::from_descents(descents, k);
}

McEstimate estimate_kernel(const Composition& mu, const Composition& lambda,
                           std::uint64_t samples, std::uint64_t seed, bool parallel) {
    if (mu.empty() || samples == 0) throw std::invalid_argument("estimate_kernel: need |μ| ≥ 1, samples ≥ 1");
    if (mu.size() > lambda.size()) return {0.0, 0.0, samples};
    const int k = mu.size();
    const FillingSampler sampler(lambda);
    const std::uint64_t nb = block_count(samples);
    std::vector<std::uint64_t> hits = map_blocks<std::uint64_t>(
        nb,
        [&](std::uint64_t b) {
            Rng rng = Rng::derived(seed, b);
            std::uint64_t h = 0;
            const std::uint64_t m = block_size_at(b, samples);
            for (std::uint64_t s = 0; s < m; ++s) {
                std::vector<int> cells = sampler.sample_low_cells(k, rng);
                if (projected_descents(cells) == mu) ++h;
            }
            return h;
        },
        parallel);
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    const double freq = static_cast<double>(total) / static_cast<double>(samples);
    const double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(samples));
    const double d_mu = to_double(Rational(count_fillings(mu), 1));
    return {freq / d_mu, se / d_mu, samples};
}

bool check_harmonic(const std::map<Composition, Rational>& p, int N) {
    if (N < 1) throw std::invalid_argument("check_harmonic: N must be ≥ 1");
    auto value = [&](const Composition& c) -> const Rational& {
        auto it = p.find(c);
        if (it == p.end()) throw IncompleteInput("missing vertex " + c.to_string());
        return it->second;
    };
    if (value(Composition({1})) != 1) return false;
    for (int m = 1; m < N; ++m) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (m - 1)); ++mask) {
            Composition mu = from_mask(m, mask);
            Rational sum = 0;
            for (const Composition& nu : covers(mu)) sum += value(nu);
            if (sum != value(mu)) return false;
        }
    }
    return true;
}

}  // namespace zigzag
