#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/numeric.hpp"
#include "zigzag/rng.hpp"

namespace zigzag {

// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;  // empty shape
    explicit Partition(std::vector<int> parts);
    static Partition row(int n);
    static Partition column(int n);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }

    std::vector<Partition> covers_up() const;    // add one box
    std::vector<Partition> covers_down() const;  // remove one corner box
    bool covered_by(const Partition& tau) const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// A standard Young tableau: rows increase rightward, columns downward,
// entries a permutation of 1..n.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);  // validates standardness

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const;
    Partition shape() const;
    bool empty() const { return rows_.empty(); }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    std::strong_ordering operator<=>(const Tableau& o) const { return rows_ <=> o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// Row insertion with recording tableau; bijective onto same-shape pairs.
std::pair<Tableau, Tableau> rsk(const Permutation& sigma);
Permutation inverse_rsk(const Tableau& p, const Tableau& q);

// T_↓: delete the cell containing the largest entry.
Tableau delete_largest(const Tableau& t);

// des(Q) = {i : i+1 sits in a strictly lower row than i}.
std::vector<int> tableau_descents(const Tableau& q);

// Number of standard tableaux of the shape, by the hook length formula.
BigInt count_syt(const Partition& tau);

// All standard tableaux of a shape (enumeration by corner removal);
// doubles as the oracle for the hook formula and the descent counts.
std::vector<Tableau> all_syt(const Partition& tau);

// Number of saturated chains tau → rho in the Young lattice.
BigInt young_path_count(const Partition& tau, const Partition& rho);

// Shapes of P(σ_{↓k}) for k = 1..n; a saturated chain in the Young lattice.
std::vector<Partition> project_path(const Permutation& sigma);

// Checks d_Z(∅,λ) = Σ_τ d_Y(∅,τ)·#{Q ∈ SYT(τ) : des(Q) = D_λ} by exhaustive
// tableau generation. Throws BoundExceeded for |λ| > 9.
bool verify_linkyz(const Composition& lambda);

struct ShapeEstimate {
    double estimate = 0.0;
    double stderror = 0.0;
    double target = 0.0;  // d_Y(∅,τ)·E[K_τ(shape of the full image)]
};

// Monte Carlo law of shape(P((σ_λ)_{↓k})) against the kernel prediction,
// the full-image shape law being estimated from the same sample.
std::map<Partition, ShapeEstimate> projected_marginal(const Composition& lambda, int k,
                                                      std::uint64_t samples, std::uint64_t seed);

}  // namespace zigzag
