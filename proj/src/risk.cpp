#include "puc/risk.hpp"

#include <algorithm>
#include <cmath>

#include "puc/special.hpp"
#include "puc/stats.hpp"

namespace puc {

double LognormalMarginal::quantile(double p) const {
    return std::exp(mu + sigma * norm_quantile(p));
}

double LognormalMarginal::mean() const {
    return std::exp(mu + 0.5 * sigma * sigma);
}

LognormalMarginal fit_lognormal(const std::vector<double>& data) {
    if (data.size() < 2) {
        throw ConfigError("fit_lognormal needs at least two observations");
    }
    std::vector<double> logs;
    logs.reserve(data.size());
    for (double v : data) {
        if (!(v > 0.0)) {
            throw ConfigError("fit_lognormal: observations must be positive");
        }
        logs.push_back(std::log(v));
    }
    LognormalMarginal m;
    m.mu = mean(logs);
    m.sigma = sample_stddev(logs);
    if (!(m.sigma > 0.0)) {
        throw NumericError("fit_lognormal: zero dispersion in the logs");
    }
    return m;
}

std::vector<LognormalMarginal> fit_lognormal_columns(
    const std::vector<std::vector<double>>& columns) {
    std::vector<LognormalMarginal> out;
    out.reserve(columns.size());
    for (const auto& col : columns) {
        out.push_back(fit_lognormal(col));
    }
    return out;
}

namespace {

void check_marginal_count(const std::vector<LognormalMarginal>& marginals,
                          int dim) {
    if (static_cast<int>(marginals.size()) != dim) {
        throw ConfigError(
            "simulate_totals: marginal count does not match model dimension");
    }
}

}  // namespace

std::vector<double> simulate_totals_driver(
    const std::vector<LognormalMarginal>& marginals, const DriverSpec& driver,
    long count, std::uint64_t seed, std::uint64_t stream) {
    check_marginal_count(marginals, driver.dim());
    if (count <= 0) {
        throw ConfigError("simulate_totals: count must be positive");
    }
    const int d = driver.dim();
    RandomSource rng(seed, stream);
    DriverSampler sampler(driver);
    std::vector<double> row(static_cast<std::size_t>(d));
    std::vector<double> totals(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        sampler.draw_row(rng, row.data());
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            s += marginals[static_cast<std::size_t>(k)].quantile(
                row[static_cast<std::size_t>(k)]);
        }
        totals[static_cast<std::size_t>(i)] = s;
    }
    return totals;
}

std::vector<double> simulate_totals_gamma(
    const std::vector<LognormalMarginal>& marginals, const GammaParams& params,
    const DriverSpec& driver, long count, std::uint64_t seed,
    std::uint64_t stream) {
    check_marginal_count(marginals, driver.dim());
    if (params.dim() != driver.dim()) {
        throw ConfigError(
            "simulate_totals: parameter and driver dimensions differ");
    }
    if (count <= 0) {
        throw ConfigError("simulate_totals: count must be positive");
    }
    const int d = driver.dim();
    RandomSource rng(seed, stream);
    DriverSampler sampler(driver);
    std::vector<double> row(static_cast<std::size_t>(d));
    std::vector<double> totals(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        sampler.draw_row(rng, row.data());
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            const double ak = params.a[static_cast<std::size_t>(k)];
            const double loc =
                gamma_marginal_quantile(ak, row[static_cast<std::size_t>(k)]);
            const double v = gamma_conditional_sample(rng, ak, loc);
            s += marginals[static_cast<std::size_t>(k)].quantile(v);
        }
        totals[static_cast<std::size_t>(i)] = s;
    }
    return totals;
}

double empirical_quantile(std::vector<double> sample, double p) {
    if (sample.empty()) {
        throw ConfigError("empirical_quantile: empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("empirical_quantile: p must lie in [0,1]");
    }
    std::sort(sample.begin(), sample.end());
    const double h = p * static_cast<double>(sample.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sample.size()) {
        return sample.back();
    }
    const double w = h - std::floor(h);
    return sample[lo] + w * (sample[lo + 1] - sample[lo]);
}

VaRReport aggregate_var(const SampleBatch& batch,
                        const std::vector<LognormalMarginal>& marginals,
                        std::vector<double> levels) {
    check_marginal_count(marginals, static_cast<int>(batch.cols()));
    if (batch.rows() <= 0) {
        throw ConfigError("aggregate_var: empty batch");
    }
    std::vector<double> totals(static_cast<std::size_t>(batch.rows()));
    for (long i = 0; i < batch.rows(); ++i) {
        double s = 0.0;
        for (long k = 0; k < batch.cols(); ++k) {
            s += marginals[static_cast<std::size_t>(k)].quantile(
                batch.values(i, k));
        }
        totals[static_cast<std::size_t>(i)] = s;
    }
    std::string label = batch.driver_label;
    if (!batch.family_label.empty()) {
        label += "+" + batch.family_label;
    }
    return var_from_totals(totals, std::move(levels), std::move(label));
}

VaRReport var_from_totals(const std::vector<double>& totals,
                          std::vector<double> levels,
                          std::string copula_label) {
    constexpr int kSections = 20;
    if (totals.size() < static_cast<std::size_t>(20 * kSections)) {
        throw ConfigError("var_from_totals: too few simulations");
    }
    for (double u : levels) {
        if (!(u > 0.0 && u < 0.5)) {
            throw ConfigError(
                "var_from_totals: levels are upper-tail probabilities in "
                "(0, 0.5)");
        }
    }

    VaRReport report;
    report.levels = levels;
    report.n_sims = static_cast<long long>(totals.size());
    report.copula_label = std::move(copula_label);

    std::vector<double> sorted(totals);
    std::sort(sorted.begin(), sorted.end());
    // empirical_quantile would re-sort per level; interpolate directly.
    const auto quantile_sorted = [&sorted](double p) {
        const double h = p * static_cast<double>(sorted.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        if (lo + 1 >= sorted.size()) return sorted.back();
        const double w = h - std::floor(h);
        return sorted[lo] + w * (sorted[lo + 1] - sorted[lo]);
    };

    const std::size_t per = totals.size() / kSections;
    std::vector<std::vector<double>> section_sorted(kSections);
    for (int sec = 0; sec < kSections; ++sec) {
        const std::size_t begin = static_cast<std::size_t>(sec) * per;
        const std::size_t end =
            sec + 1 == kSections ? totals.size() : begin + per;
        section_sorted[static_cast<std::size_t>(sec)].assign(
            totals.begin() + static_cast<std::ptrdiff_t>(begin),
            totals.begin() + static_cast<std::ptrdiff_t>(end));
        auto& block = section_sorted[static_cast<std::size_t>(sec)];
        std::sort(block.begin(), block.end());
    }

    for (double u : levels) {
        const double p = 1.0 - u;
        report.var.push_back(quantile_sorted(p));
        std::vector<double> section_vars;
        section_vars.reserve(kSections);
        for (const auto& block : section_sorted) {
            const double h = p * static_cast<double>(block.size() - 1);
            const auto lo = static_cast<std::size_t>(std::floor(h));
            const double w = h - std::floor(h);
            const double q = lo + 1 >= block.size()
                                 ? block.back()
                                 : block[lo] + w * (block[lo + 1] - block[lo]);
            section_vars.push_back(q);
        }
        report.std_err.push_back(sample_stddev(section_vars) /
                                 std::sqrt(static_cast<double>(kSections)));
    }
    return report;
}

}  // namespace puc
