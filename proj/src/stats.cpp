#include "zigzag/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zigzag {

double normal_cdf(double x, double mean, double variance) {
    return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_distance of empty sample");
    std::sort(sample.begin(), sample.end());
    const double m = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / m));
        d = std::max(d, std::abs(f - static_cast<double>(i) / m));
    }
    return d;
}

double mean_of(const std::vector<double>& xs) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

double variance_of(const std::vector<double>& xs) {
    const double m = mean_of(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return acc / static_cast<double>(xs.size() - 1);
}

CovEstimate covariance_of(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("covariance_of: bad input");
    const double mx = mean_of(xs);
    const double my = mean_of(ys);
    const double n = static_cast<double>(xs.size());
    std::vector<double> prods(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) prods[i] = (xs[i] - mx) * (ys[i] - my);
    CovEstimate out;
    out.cov = 0.0;
    for (double p : prods) out.cov += p;
    out.cov /= n - 1.0;
    // standard error of the covariance from the spread of the products
    out.stderror = std::sqrt(variance_of(prods) / n);
    return out;
}

double correlation_of(const std::vector<double>& xs, const std::vector<double>& ys) {
    return covariance_of(xs, ys).cov / std::sqrt(variance_of(xs) * variance_of(ys));
}

double chi_square_critical(int df, double z_alpha) {
    const double d = static_cast<double>(df);
    const double t = 1.0 - 2.0 / (9.0 * d) + z_alpha * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

double chi_square_statistic(const std::vector<std::uint64_t>& observed,
                            const std::vector<double>& expected) {
    if (observed.size() != expected.size()) throw std::invalid_argument("chi_square: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

}  // namespace zigzag
