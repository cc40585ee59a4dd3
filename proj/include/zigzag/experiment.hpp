#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/composition.hpp"
#include "zigzag/paintbox.hpp"

namespace zigzag {

// Composition sequence generators. The three shapes cover the boundary
// regimes the experiments need: all-descent, vanishing components, and a
// fixed finite-interval limit.
//   column        → (1,…,1), target (∅, (0,1))
//   zigzag:B      → block B repeated (size must be a multiple of |B|),
//                   target (∅,∅)
//   fixed:P       → parts of P scaled proportionally (size a multiple of
//                   |P|), target the interval system of P's part fractions
//   random        → uniformly random descent set (seeded); no target
struct SequenceSpec {
    enum class Kind { column, zigzag, fixed, random } kind;
    std::vector<int> block;  // for zigzag/fixed
    static SequenceSpec parse(const std::string& text);
    Composition at(int size, std::uint64_t seed = 0) const;
    std::optional<IntervalSystem> target() const;
    std::string to_string() const;
};

struct ExperimentConfig {
    std::string experiment;  // "boundary-convergence" | "xi-uniformity"
    SequenceSpec sequence = SequenceSpec{SequenceSpec::Kind::zigzag, {2}};
    std::vector<int> sizes;
    int kmax = 3;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    double tolerance = 0.1;    // final kernel error bound (exact records)
    double ks_tolerance = 0.05;
    double corr_tolerance = 0.05;
    int exact_max_size = 20;   // above this, kernels switch to Monte Carlo
    std::string out_path;

    // flat TOML subset: key = value with strings, numbers, booleans and
    // arrays of integers
    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig parse(const std::string& text);
};

struct ExperimentRecord {
    int n = 0;
    std::string quantity;      // e.g. "kernel:2,1" or "ks:xi1"
    std::string provenance;    // "exact" | "mc"
    double value = 0.0;
    double stderror = 0.0;     // 0 for exact records
    double target = 0.0;
    double target_stderror = 0.0;
    double error = 0.0;        // |value − target|
    bool pass = true;
};

struct ExperimentReport {
    std::string experiment;
    std::string sequence;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<ExperimentRecord> records;
    bool all_pass = true;

    std::string to_json() const;  // deterministic bytes
    std::string to_csv() const;
    static ExperimentReport from_json(const std::string& text);
};

// Kernel convergence along a composition sequence against the paintbox law
// of the target system. Exact kernels up to exact_max_size, Monte Carlo
// beyond; MC records pass at 4 joint standard errors, exact records by the
// configured tolerance at the final size plus a non-increasing error trend.
ExperimentReport run_boundary_convergence(const ExperimentConfig& cfg);

// KS distance to Uniform[0,1] of each ξ coordinate and pairwise empirical
// correlations, per size.
ExperimentReport run_xi_uniformity(const ExperimentConfig& cfg);

enum class EmitFormat { json, csv };
void emit(const ExperimentReport& report, EmitFormat format, const std::string& path);

}  // namespace zigzag
