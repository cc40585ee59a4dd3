#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace zigzag {

double normal_cdf(double x, double mean = 0.0, double variance = 1.0);

// Kolmogorov–Smirnov distance between a sample and a reference CDF.
// Sorts a copy of the sample.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

double mean_of(const std::vector<double>& xs);
double variance_of(const std::vector<double>& xs);  // unbiased

struct CovEstimate {
    double cov = 0.0;
    double stderror = 0.0;  // of the covariance estimate
};
CovEstimate covariance_of(const std::vector<double>& xs, const std::vector<double>& ys);

double correlation_of(const std::vector<double>& xs, const std::vector<double>& ys);

// Upper critical value of χ²(df) by the Wilson–Hilferty cube approximation.
double chi_square_critical(int df, double z_alpha = 2.3263478740408408 /* α = 0.01 */);

// Pearson statistic against given expected counts (> 0 each).
double chi_square_statistic(const std::vector<std::uint64_t>& observed,
                            const std::vector<double>& expected);

}  // namespace zigzag
