#include "puc/power_copula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "puc/errors.hpp"

namespace puc {
namespace {

constexpr double kTiny = 1e-300;
constexpr double kBelowOne = 0x1.fffffffffffffp-1;
constexpr double kLatentGuard = 1e-12;

void check_beta(double beta) {
    if (!(beta > 2.0)) {
        throw ConfigError("power family: beta must exceed 2");
    }
}

void check_interior(double s, const char* what) {
    if (!(s > 0.0 && s < 1.0)) {
        throw ConfigError(std::string(what) + " must lie strictly in (0,1)");
    }
}

/// D(s) = 1 - s^{beta-1} - (1-s)^{beta-1}, written as
/// (1 - (1-s)^{beta-1}) - s^{beta-1} with expm1/log1p so the
/// cancellation near s -> 0 does not lose precision.
double big_d(double beta, double s) {
    return -std::expm1((beta - 1.0) * std::log1p(-s)) -
           std::pow(s, beta - 1.0);
}

}  // namespace

PowerParams::PowerParams(std::vector<double> exponents)
    : beta(std::move(exponents)) {
    if (beta.empty()) {
        throw ConfigError("PowerParams: at least one exponent required");
    }
    for (double b : beta) check_beta(b);
}

std::string PowerParams::label() const {
    std::string out = "power(beta=";
    char buf[32];
    const bool uniform = std::all_of(beta.begin(), beta.end(),
                                     [&](double v) { return v == beta[0]; });
    const std::size_t shown = uniform ? 1 : beta.size();
    for (std::size_t i = 0; i < shown; ++i) {
        std::snprintf(buf, sizeof buf, "%g", beta[i]);
        if (i) out += ",";
        out += buf;
    }
    out += ")";
    return out;
}

double power_alpha(double beta, double s) {
    check_beta(beta);
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ConfigError("power_alpha: location must lie in [0,1]");
    }
    if (s == 0.0 || s == 1.0) return 0.0;
    return beta / (beta - 2.0) * big_d(beta, s);
}

double power_marginal_cdf(double beta, double s) {
    check_beta(beta);
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ConfigError("power_marginal_cdf: location must lie in [0,1]");
    }
    if (s == 0.0) return 0.0;
    if (s == 1.0) return 1.0;
    const double one_minus = 1.0 - s;
    return (std::pow(one_minus, beta) - std::pow(s, beta) + beta * s - 1.0) /
           (beta - 2.0);
}

double power_conditional_cdf(double beta, double s, double v) {
    check_beta(beta);
    check_interior(s, "conditional location s");
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double d = big_d(beta, s);
    const double log_base = (beta - 1.0) * std::log1p(-s);
    if (v <= s) {
        // (1-v)^{2-beta} - 1 computed without cancellation.
        const double grow = std::expm1((2.0 - beta) * std::log1p(-v));
        return std::exp(log_base) * grow / d;
    }
    const double head = -std::expm1(log_base);  // 1 - (1-s)^{beta-1}
    const double tail =
        std::exp((beta - 1.0) * std::log(s) + (2.0 - beta) * std::log(v));
    return std::min(1.0, std::max(0.0, (head - tail) / d));
}

double power_conditional_split(double beta, double s) {
    check_beta(beta);
    check_interior(s, "conditional location s");
    // ((1-s) - (1-s)^{beta-1}) / D = (1-s) (1 - (1-s)^{beta-2}) / D.
    const double one_minus = 1.0 - s;
    const double inner = -std::expm1((beta - 2.0) * std::log1p(-s));
    return one_minus * inner / big_d(beta, s);
}

double power_conditional_quantile(double beta, double s, double p) {
    check_beta(beta);
    check_interior(s, "conditional location s");
    if (!(p > 0.0 && p < 1.0)) {
        throw ConfigError("conditional probability p must lie in (0,1)");
    }
    const double d = big_d(beta, s);
    const double split = power_conditional_split(beta, s);
    double v;
    if (p <= split) {
        // Invert (1-s)^{beta-1}[(1-v)^{2-beta} - 1]/D = p in log space;
        // log_base stays finite even when (1-s)^{beta-1} underflows.
        const double log_base = (beta - 1.0) * std::log1p(-s);
        const double denom = std::exp(log_base) + p * d;
        v = -std::expm1((log_base - std::log(denom)) / (beta - 2.0));
    } else {
        const double head = -std::expm1((beta - 1.0) * std::log1p(-s));
        const double rem = std::max(head - p * d, kTiny);
        v = std::exp(((beta - 1.0) * std::log(s) - std::log(rem)) /
                     (beta - 2.0));
    }
    return std::min(std::max(v, kTiny), kBelowOne);
}

PowerMarginalTable::PowerMarginalTable(double beta, int points)
    : beta_(beta) {
    check_beta(beta);
    if (points < 3) {
        throw ConfigError("PowerMarginalTable: need at least 3 grid points");
    }
    grid_a_.resize(static_cast<std::size_t>(points));
    const double step = 1.0 / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        grid_a_[static_cast<std::size_t>(i)] =
            power_marginal_cdf(beta, static_cast<double>(i) * step);
    }
    grid_a_.front() = 0.0;
    grid_a_.back() = 1.0;
}

double PowerMarginalTable::invert(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw ConfigError("PowerMarginalTable::invert: u must lie in (0,1)");
    }
    const int points = static_cast<int>(grid_a_.size());
    const double step = 1.0 / static_cast<double>(points - 1);
    const auto it = std::upper_bound(grid_a_.begin(), grid_a_.end(), u);
    int hi_idx = static_cast<int>(it - grid_a_.begin());
    hi_idx = std::min(std::max(hi_idx, 1), points - 1);
    double lo = static_cast<double>(hi_idx - 1) * step;
    double hi = static_cast<double>(hi_idx) * step;

    double s = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double err = power_marginal_cdf(beta_, s) - u;
        if (std::abs(err) <= 1e-10) {
            return std::min(std::max(s, kLatentGuard), 1.0 - kLatentGuard);
        }
        if (err > 0.0) {
            hi = s;
        } else {
            lo = s;
        }
        const double slope = power_alpha(beta_, s);
        double next = slope > 0.0 ? s - err / slope : s;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        s = next;
    }
    throw NumericError("PowerMarginalTable::invert failed to converge");
}

SampleBatch power_sample(const PowerParams& params, const DriverSpec& driver,
                         long count, RandomSource& rng) {
    if (params.dim() != driver.dim()) {
        throw ConfigError(
            "power_sample: parameter and driver dimensions differ");
    }
    if (count < 0) {
        throw ConfigError("power_sample: count must be nonnegative");
    }
    const int d = params.dim();
    std::vector<PowerMarginalTable> tables;
    tables.reserve(static_cast<std::size_t>(d));
    for (double b : params.beta) tables.emplace_back(b);

    DriverSampler sampler(driver);
    SampleBatch batch;
    batch.latents.resize(count, d);
    batch.values.resize(count, d);
    if (driver.is_patchwork()) {
        batch.cells.resize(static_cast<std::size_t>(count));
    }
    std::vector<double> row(static_cast<std::size_t>(d));
    for (long i = 0; i < count; ++i) {
        const int cell = sampler.draw_row(rng, row.data());
        if (!batch.cells.empty()) {
            batch.cells[static_cast<std::size_t>(i)] = cell;
        }
        for (int k = 0; k < d; ++k) {
            const double b = params.beta[static_cast<std::size_t>(k)];
            const double s = tables[static_cast<std::size_t>(k)].invert(
                row[static_cast<std::size_t>(k)]);
            batch.latents(i, k) = s;
            batch.values(i, k) =
                power_conditional_quantile(b, s, rng.next_uniform());
        }
    }
    batch.seed = rng.seed();
    batch.stream = rng.stream();
    batch.driver_label = driver.label();
    batch.family_label = params.label();
    return batch;
}

SampleBatch power_sample(const PowerParams& params, const DriverSpec& driver,
                         long count, std::uint64_t seed, std::uint64_t stream) {
    RandomSource rng(seed, stream);
    return power_sample(params, driver, count, rng);
}

}  // namespace puc
