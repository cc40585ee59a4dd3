#include "zigzag/rsk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "zigzag/errors.hpp"
#include "zigzag/graph.hpp"

namespace zigzag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must decrease weakly");
        degree_ += parts_[i];
    }
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::column(int n) {
    return n == 0 ? Partition() : Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::vector<Partition> Partition::covers_up() const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i <= parts_.size(); ++i) {
        if (i < parts_.size() && i > 0 && parts_[i] == parts_[i - 1]) continue;
        std::vector<int> grown = parts_;
        if (i == parts_.size())
            grown.push_back(1);
        else
            ++grown[i];
        out.emplace_back(std::move(grown));
    }
    return out;
}

std::vector<Partition> Partition::covers_down() const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i + 1 < parts_.size() && parts_[i] == parts_[i + 1]) continue;  // not a corner
        std::vector<int> shrunk = parts_;
        if (--shrunk[i] == 0) shrunk.pop_back();
        out.emplace_back(std::move(shrunk));
    }
    return out;
}

bool Partition::covered_by(const Partition& tau) const {
    if (tau.degree() != degree_ + 1 || tau.length() < length()) return false;
    bool bumped = false;
    for (int i = 0; i < tau.length(); ++i) {
        int mine = i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
        int theirs = tau.parts()[static_cast<std::size_t>(i)];
        if (theirs == mine) continue;
        if (theirs == mine + 1 && !bumped)
            bumped = true;
        else
            return false;
    }
    return bumped;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        if (r.empty()) throw std::invalid_argument("empty tableau row");
        if (i > 0 && r.size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau shape must be a partition");
        for (std::size_t j = 0; j < r.size(); ++j) {
            int v = r[j];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("entries must be a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = 1;
            if (j > 0 && r[j - 1] >= v) throw std::invalid_argument("rows must increase");
            if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("columns must increase");
        }
    }
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return parts.empty() ? Partition() : Partition(std::move(parts));
}

namespace {

// Row-inserts v, recording the new cell in q with label `stamp`.
void insert(std::vector<std::vector<int>>& p, std::vector<std::vector<int>>& q, int v, int stamp) {
    for (std::size_t r = 0;; ++r) {
        if (r == p.size()) {
            p.emplace_back(1, v);
            q.emplace_back(1, stamp);
            return;
        }
        auto it = std::upper_bound(p[r].begin(), p[r].end(), v);
        if (it == p[r].end()) {
            p[r].push_back(v);
            q[r].push_back(stamp);
            return;
        }
        std::swap(*it, v);  // bump
    }
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const Permutation& sigma) {
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= sigma.size(); ++i) insert(p, q, sigma(i), i);
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation inverse_rsk(const Tableau& p, const Tableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("inverse_rsk: shape mismatch");
    std::vector<std::vector<int>> work = p.rows();
    const int n = p.size();
    // locate each recording entry
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (std::size_t c = 0; c < q.rows()[r].size(); ++c)
            where[static_cast<std::size_t>(q.rows()[r][c])] = {static_cast<int>(r), static_cast<int>(c)};
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        auto [r, c] = where[static_cast<std::size_t>(i)];
        int v = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        work[static_cast<std::size_t>(r)].pop_back();
        for (int row = r - 1; row >= 0; --row) {
            auto& cells = work[static_cast<std::size_t>(row)];
            auto it = std::lower_bound(cells.begin(), cells.end(), v);
            --it;  // rightmost entry < v
            std::swap(*it, v);
        }
        word[static_cast<std::size_t>(i - 1)] = v;
        if (work.back().empty()) work.pop_back();
    }
    return Permutation(std::move(word));
}

Tableau delete_largest(const Tableau& t) {
    if (t.empty()) throw std::invalid_argument("delete_largest of the empty tableau");
    const int n = t.size();
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& r : rows) {
        if (!r.empty() && r.back() == n) {
            r.pop_back();
            break;
        }
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(std::move(rows));
}

std::vector<int> tableau_descents(const Tableau& q) {
    const int n = q.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (int v : q.rows()[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

BigInt count_syt(const Partition& tau) {
    const int n = tau.degree();
    if (n == 0) return 1;
    const std::vector<int>& parts = tau.parts();
    std::vector<int> col_len(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++col_len[static_cast<std::size_t>(j)];
    BigInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = col_len[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(n) / hooks;
}

std::vector<Tableau> all_syt(const Partition& tau) {
    // grow every saturated chain ∅ → τ; the step-t box gets label t
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    std::vector<int> filled;  // cells filled per row
    filled.assign(tau.parts().size(), 0);
    rows.assign(tau.parts().size(), {});
    const int n = tau.degree();
    std::function<void(int)> grow = [&](int t) {
        if (t > n) {
            std::vector<std::vector<int>> snapshot;
            for (const auto& r : rows)
                if (!r.empty()) snapshot.push_back(r);
            out.emplace_back(std::move(snapshot));
            return;
        }
        for (std::size_t i = 0; i < filled.size(); ++i) {
            if (filled[i] >= tau.parts()[i]) continue;
            if (i > 0 && filled[i] >= filled[i - 1]) continue;
            rows[i].push_back(t);
            ++filled[i];
            grow(t + 1);
            --filled[i];
            rows[i].pop_back();
        }
    };
    grow(1);
    return out;
}

namespace {

bool fits_inside(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts()[static_cast<std::size_t>(i)] > outer.parts()[static_cast<std::size_t>(i)])
            return false;
    return true;
}

}  // namespace

BigInt young_path_count(const Partition& tau, const Partition& rho) {
    if (tau.degree() > rho.degree() || !fits_inside(tau, rho)) return 0;
    std::map<Partition, BigInt> memo;
    std::function<BigInt(const Partition&)> rec = [&](const Partition& cur) -> BigInt {
        if (cur.degree() == rho.degree()) return cur == rho ? 1 : 0;
        auto it = memo.find(cur);
        if (it != memo.end()) return it->second;
        BigInt acc = 0;
        for (const Partition& up : cur.covers_up())
            if (fits_inside(up, rho)) acc += rec(up);
        return memo.emplace(cur, acc).first->second;
    };
    return rec(tau);
}

std::vector<Partition> project_path(const Permutation& sigma) {
    std::vector<Partition> out;
    for (int k = 1; k <= sigma.size(); ++k) out.push_back(rsk(sigma.project_down(k)).first.shape());
    return out;
}

bool verify_linkyz(const Composition& lambda) {
    const int n = lambda.size();
    if (n > 9) throw BoundExceeded("verify_linkyz limited to |λ| ≤ 9");
    BigInt rhs = 0;
    std::function<void(std::vector<int>&, int, int)> walk = [&](std::vector<int>& parts, int rem, int maxp) {
        if (rem == 0) {
            Partition tau(parts);
            BigInt matches = 0;
            for (const Tableau& q : all_syt(tau))
                if (tableau_descents(q) == lambda.descents()) ++matches;
            rhs += count_syt(tau) * matches;
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            parts.push_back(p);
            walk(parts, rem - p, p);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    walk(parts, n, n);
    return rhs == count_fillings(lambda);
}

std::map<Partition, ShapeEstimate> projected_marginal(const Composition& lambda, int k,
                                                      std::uint64_t samples, std::uint64_t seed) {
    if (k < 1 || k > lambda.size()) throw std::invalid_argument("projected_marginal: k outside [1,n]");
    FillingSampler sampler(lambda);
    Rng rng(seed);
    std::map<Partition, std::uint64_t> hits;
    std::map<Partition, std::uint64_t> full_law;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Permutation sigma = sampler.sample(rng);
        ++hits[rsk(sigma.project_down(k)).first.shape()];
        ++full_law[rsk(sigma).first.shape()];
    }
    std::map<Partition, ShapeEstimate> out;
    for (const auto& [tau, count] : hits) {
        ShapeEstimate est;
        est.estimate = static_cast<double>(count) / static_cast<double>(samples);
        est.stderror = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
        // kernel prediction: d_Y(∅,τ)·E[d_Y(τ,ρ)/d_Y(∅,ρ)] over the full-image law
        double target = 0.0;
        for (const auto& [rho, rho_count] : full_law) {
            Rational kernel(young_path_count(tau, rho), count_syt(rho));
            target += to_double(kernel) * static_cast<double>(rho_count) / static_cast<double>(samples);
        }
        est.target = to_double(Rational(count_syt(tau), 1)) * target;
        out[tau] = est;
    }
    return out;
}

}  // namespace zigzag
