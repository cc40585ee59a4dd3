#pragma once

#include <compare>
#include <string>
#include <vector>

namespace zigzag {

// A composition of n: ordered positive parts (λ_1,…,λ_r). Equivalently a
// ribbon diagram with n cells, or the descent set D_λ ⊂ [1,n−1]. The empty
// composition is the root of the zigzag lattice and is otherwise rejected
// by most operations. Immutable.
class Composition {
public:
    Composition() = default;  // the root ∅
    explicit Composition(std::vector<int> parts);

    static Composition from_descents(const std::vector<int>& descents, int n);
    static Composition parse(const std::string& text);  // "3,2,4,1"

    const std::vector<int>& parts() const { return parts_; }
    const std::vector<int>& descents() const { return descents_; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // True iff i ∈ D_λ (valid for any i; positions outside [1,n−1] are not descents).
    bool is_descent(int i) const {
        return i >= 1 && i < size_ && desc_flag_[static_cast<std::size_t>(i)] != 0;
    }

    std::string to_string() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Composition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<int> descents_;      // cached, strictly increasing
    std::vector<char> desc_flag_;    // indexed 0..n (indicator on [1,n−1])
    int size_ = 0;
};

// A permutation of [1,n] as a word (σ(1),…,σ(n)); doubles as a standard
// filling of the ribbon with descent set des(σ), read along the ribbon.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    std::vector<int> inverse_word() const;  // position of each value
    std::vector<int> descent_set() const;
    Composition descent_composition() const;

    // σ_{↓k}: erase all letters larger than k, keeping relative order.
    Permutation project_down(int k) const;

    std::string to_string() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    std::strong_ordering operator<=>(const Permutation& o) const {
        return word_ <=> o.word_;
    }

private:
    std::vector<int> word_;
};

// Peaks, valleys, runs and per-cell slopes of a ribbon.
// Cell i is a peak iff every standard filling has a local maximum there,
// a valley for local minima; runs are the maximal monotone segments
// [a_i; a_{i+1}] between consecutive extreme cells.
class RunDecomposition {
public:
    struct Run {
        int a, b;        // endpoints in [1,n], b > a
        bool ascending;  // starts at a valley
        int length() const { return b - a; }
        int cells() const { return b - a + 1; }
    };
    struct Slope {
        int lo, hi;  // [x(i); y(i)], the maximal interval around i free of other extremes
    };

    explicit RunDecomposition(const Composition& lambda);

    const std::vector<int>& valleys() const { return valleys_; }
    const std::vector<int>& peaks() const { return peaks_; }
    const std::vector<int>& extremes() const { return extremes_; }
    const std::vector<Run>& runs() const { return runs_; }
    Slope slope(int cell) const { return slopes_[static_cast<std::size_t>(cell - 1)]; }
    bool is_valley(int cell) const;
    bool is_peak(int cell) const;
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<int> valleys_, peaks_, extremes_;
    std::vector<Run> runs_;
    std::vector<Slope> slopes_;
};

enum class ConcatMode { plus, minus };

// λ+μ merges the facing parts, λ−μ stacks them; |λεμ| = |λ|+|μ| either way.
Composition concat(const Composition& lambda, const Composition& mu, ConcatMode mode);

// Induced composition on the contiguous cell window [lo,hi] (1-based,
// inclusive); descents re-indexed to the window. Throws EmptyRestriction
// when the window misses [1,n].
Composition restricted(const Composition& lambda, int lo, int hi);

// λ_{<i} and λ_{>i}; empty windows throw as above.
Composition left_of(const Composition& lambda, int i);
Composition right_of(const Composition& lambda, int i);

}  // namespace zigzag
