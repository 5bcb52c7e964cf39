#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace puc {

/// Kolmogorov-Smirnov statistic of a sample against the uniform law on
/// (0,1): max over the sorted sample of the distance between the
/// empirical CDF step and the identity.
double ks_uniform(std::vector<double> sample);

/// Kolmogorov-Smirnov statistic against an arbitrary continuous CDF.
double ks_vs_cdf(std::vector<double> sample,
                 const std::function<double(double)>& cdf);

/// Pearson product-moment correlation of two equal-length series.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Ranks of a series, 1-based, ties broken by first occurrence (stable).
std::vector<int> stable_ranks(const std::vector<double>& x);

/// Spearman rank correlation: Pearson correlation of the stable ranks.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Sample mean.
double mean(const std::vector<double>& x);

/// Sample standard deviation with n-1 denominator.
double sample_stddev(const std::vector<double>& x);

}  // namespace puc
