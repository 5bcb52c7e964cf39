#include "puc/stats.hpp"

#include <numeric>

#include "puc/errors.hpp"

namespace puc {

double ks_uniform(std::vector<double> sample) {
    return ks_vs_cdf(std::move(sample), [](double x) { return x; });
}

double ks_vs_cdf(std::vector<double> sample,
                 const std::function<double(double)>& cdf) {
    if (sample.empty()) {
        throw ConfigError("ks statistic needs a non-empty sample");
    }
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        stat = std::max(stat, std::max(f - lo, hi - f));
    }
    return stat;
}

double mean(const std::vector<double>& x) {
    if (x.empty()) {
        throw ConfigError("mean of empty series");
    }
    return std::accumulate(x.begin(), x.end(), 0.0) /
           static_cast<double>(x.size());
}

double sample_stddev(const std::vector<double>& x) {
    if (x.size() < 2) {
        throw ConfigError("sample_stddev needs at least two points");
    }
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw ConfigError("pearson: series lengths differ");
    }
    if (x.size() < 2) {
        throw ConfigError("pearson needs at least two points");
    }
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        throw NumericError("pearson: a series is constant");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<int> stable_ranks(const std::vector<double>& x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<int> ranks(x.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        ranks[order[pos]] = static_cast<int>(pos + 1);
    }
    return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    const std::vector<int> rx = stable_ranks(x);
    const std::vector<int> ry = stable_ranks(y);
    std::vector<double> dx(rx.begin(), rx.end());
    std::vector<double> dy(ry.begin(), ry.end());
    return pearson(dx, dy);
}

}  // namespace puc
