#include "zigzag/composition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    int n = 0;
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        n += p;
    }
    size_ = n;
    desc_flag_.assign(static_cast<std::size_t>(n) + 1, 0);
    int acc = 0;
    for (std::size_t j = 0; j + 1 < parts_.size(); ++j) {
        acc += parts_[j];
        descents_.push_back(acc);
        desc_flag_[static_cast<std::size_t>(acc)] = 1;
    }
}

Composition Composition::from_descents(const std::vector<int>& descents, int n) {
    if (n < 1) throw InvalidDescent("composition size must be at least 1");
    std::vector<int> sorted = descents;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> parts;
    int prev = 0;
    for (int d : sorted) {
        if (d <= 0 || d >= n) throw InvalidDescent("descent " + std::to_string(d) + " outside [1," + std::to_string(n - 1) + "]");
        if (d == prev) throw InvalidDescent("repeated descent " + std::to_string(d));
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::parse(const std::string& text) {
    if (text.empty()) return Composition();
    return Composition(parse_int_list(text));
}

std::string Composition::to_string() const { return join_ints(parts_); }

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("word is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    return Permutation(parse_int_list(text));
}

std::vector<int> Permutation::inverse_word() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return inv;
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (word_[static_cast<std::size_t>(i)] < word_[static_cast<std::size_t>(i - 1)]) d.push_back(i);
    return d;
}

Composition Permutation::descent_composition() const {
    return Composition::from_descents(descent_set(), size());
}

Permutation Permutation::project_down(int k) const {
    if (k < 1 || k > size()) throw std::invalid_argument("project_down: k outside [1,n]");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(k));
    for (int v : word_)
        if (v <= k) w.push_back(v);
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return join_ints(word_); }

RunDecomposition::RunDecomposition(const Composition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("run decomposition of the empty composition");
    n_ = lambda.size();
    if (n_ == 1) {
        valleys_ = {1};
        extremes_ = {1};
        slopes_ = {Slope{1, 1}};
        return;
    }
    for (int i = 1; i <= n_; ++i) {
        bool desc_before = lambda.is_descent(i - 1);  // false at i == 1
        bool desc_here = lambda.is_descent(i);
        if (!desc_here && i < n_ && !desc_before && i > 1) continue;
        if ((desc_here || i == n_) && !desc_before)
            peaks_.push_back(i);
        else if (!desc_here && (desc_before || i == 1))
            valleys_.push_back(i);
    }
    extremes_.resize(valleys_.size() + peaks_.size());
    std::merge(valleys_.begin(), valleys_.end(), peaks_.begin(), peaks_.end(), extremes_.begin());
    for (std::size_t j = 0; j + 1 < extremes_.size(); ++j) {
        Run r;
        r.a = extremes_[j];
        r.b = extremes_[j + 1];
        r.ascending = std::binary_search(valleys_.begin(), valleys_.end(), r.a);
        runs_.push_back(r);
    }
    // Slope of cell i: the widest interval around i containing no other extreme.
    slopes_.resize(static_cast<std::size_t>(n_));
    std::size_t e = 0;
    for (int i = 1; i <= n_; ++i) {
        while (e < extremes_.size() && extremes_[e] < i) ++e;
        // extremes_[e] is the first extreme >= i (if any)
        int prev = 0, next = n_ + 1;
        if (e > 0) prev = extremes_[e - 1];
        if (e < extremes_.size()) next = (extremes_[e] == i) ? (e + 1 < extremes_.size() ? extremes_[e + 1] : n_ + 1) : extremes_[e];
        slopes_[static_cast<std::size_t>(i - 1)] = Slope{prev + 1, next - 1};
    }
}

bool RunDecomposition::is_valley(int cell) const {
    return std::binary_search(valleys_.begin(), valleys_.end(), cell);
}

bool RunDecomposition::is_peak(int cell) const {
    return std::binary_search(peaks_.begin(), peaks_.end(), cell);
}

Composition concat(const Composition& lambda, const Composition& mu, ConcatMode mode) {
    if (lambda.empty() || mu.empty()) throw std::invalid_argument("concat of empty composition");
    std::vector<int> parts = lambda.parts();
    const std::vector<int>& right = mu.parts();
    if (mode == ConcatMode::plus) {
        parts.back() += right.front();
        parts.insert(parts.end(), right.begin() + 1, right.end());
    } else {
        parts.insert(parts.end(), right.begin(), right.end());
    }
    return Composition(std::move(parts));
}

Composition restricted(const Composition& lambda, int lo, int hi) {
    lo = std::max(lo, 1);
    hi = std::min(hi, lambda.size());
    if (lambda.empty() || lo > hi) throw EmptyRestriction("empty cell window");
    std::vector<int> descents;
    for (int d : lambda.descents())
        if (d >= lo && d < hi) descents.push_back(d - lo + 1);
    return Composition::from_descents(descents, hi - lo + 1);
}

Composition left_of(const Composition& lambda, int i) { return restricted(lambda, 1, i - 1); }

Composition right_of(const Composition& lambda, int i) { return restricted(lambda, i + 1, lambda.size()); }

}  // namespace zigzag
