#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "puc/driver.hpp"
#include "puc/gamma_copula.hpp"

namespace puc {

/// Lognormal marginal fitted to positive observations: mu and sigma are
/// the mean and (n-1) standard deviation of the logs.
struct LognormalMarginal {
    double mu = 0.0;
    double sigma = 1.0;

    [[nodiscard]] double quantile(double p) const;
    [[nodiscard]] double mean() const;
};

LognormalMarginal fit_lognormal(const std::vector<double>& data);
std::vector<LognormalMarginal> fit_lognormal_columns(
    const std::vector<std::vector<double>>& columns);

/// Simulated aggregate totals S = sum_k Q_k(V_k), where V is one row of
/// the dependence model and Q_k the k-th lognormal marginal quantile.
/// The driver's output is used directly as the copula sample.
std::vector<double> simulate_totals_driver(
    const std::vector<LognormalMarginal>& marginals, const DriverSpec& driver,
    long count, std::uint64_t seed, std::uint64_t stream = 0);

/// Same, but the driver feeds the gamma latent family and V is the
/// conditional component draw (the two-step construction).
std::vector<double> simulate_totals_gamma(
    const std::vector<LognormalMarginal>& marginals, const GammaParams& params,
    const DriverSpec& driver, long count, std::uint64_t seed,
    std::uint64_t stream = 0);

/// Empirical Value-at-Risk report at upper-tail levels u (the quantile
/// at probability 1-u, linear interpolation on order statistics).
/// Standard errors come from splitting the run into 20 contiguous
/// sections and treating their VaRs as independent draws.
struct VaRReport {
    std::vector<double> levels;
    std::vector<double> var;
    std::vector<double> std_err;
    long long n_sims = 0;
    std::string copula_label;
};

/// Full aggregation step: map each batch coordinate through its
/// lognormal quantile, sum rows into totals S, and report VaR levels.
VaRReport aggregate_var(const SampleBatch& batch,
                        const std::vector<LognormalMarginal>& marginals,
                        std::vector<double> levels);

/// Reduction over precomputed totals (what aggregate_var delegates to;
/// also the entry point for the streaming simulators above).
VaRReport var_from_totals(const std::vector<double>& totals,
                          std::vector<double> levels,
                          std::string copula_label);

/// Linear-interpolation empirical quantile (the common "type 7" rule)
/// at probability p of the given sample.
double empirical_quantile(std::vector<double> sample, double p);

}  // namespace puc
