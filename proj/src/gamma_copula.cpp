#include "puc/gamma_copula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "puc/quadrature.hpp"
#include "puc/samplers.hpp"
#include "puc/special.hpp"

namespace puc {
namespace {

constexpr double kTiny = 1e-300;
constexpr double kBelowOne = 0x1.fffffffffffffp-1;

void check_unit_open(double u, const char* what) {
    if (!(u > 0.0 && u < 1.0)) {
        throw ConfigError(std::string(what) + " must lie strictly in (0,1)");
    }
}

void check_shape_int(int a) {
    if (a < 1) {
        throw ConfigError("integer shape must be >= 1");
    }
}

double logsumexp(const std::vector<double>& logs) {
    double top = -std::numeric_limits<double>::infinity();
    for (double v : logs) top = std::max(top, v);
    if (!std::isfinite(top)) return top;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - top);
    return top + std::log(acc);
}

}  // namespace

GammaParams::GammaParams(std::vector<double> shapes) : a(std::move(shapes)) {
    if (a.empty()) {
        throw ConfigError("GammaParams: at least one shape required");
    }
    for (double v : a) {
        if (!(v > 0.0)) {
            throw ConfigError("GammaParams: shapes must be positive");
        }
    }
}

std::string GammaParams::label() const {
    std::string out = "gamma(a=";
    char buf[32];
    const bool uniform =
        std::all_of(a.begin(), a.end(), [&](double v) { return v == a[0]; });
    const std::size_t shown = uniform ? 1 : a.size();
    for (std::size_t i = 0; i < shown; ++i) {
        std::snprintf(buf, sizeof buf, "%g", a[i]);
        if (i) out += ",";
        out += buf;
    }
    out += ")";
    return out;
}

double gamma_alpha(double a, double s) {
    if (!(a > 0.0)) {
        throw ConfigError("gamma_alpha: shape must be positive");
    }
    if (!(s > 0.0)) {
        throw ConfigError("gamma_alpha: location must be positive");
    }
    return a * std::pow(s, a - 1.0) / std::pow(1.0 + s, a + 1.0);
}

double gamma_marginal_cdf(double a, double s) {
    if (!(a > 0.0)) {
        throw ConfigError("gamma_marginal_cdf: shape must be positive");
    }
    if (s <= 0.0) return 0.0;
    return std::pow(s / (1.0 + s), a);
}

double gamma_marginal_quantile(double a, double u) {
    if (!(a > 0.0)) {
        throw ConfigError("gamma_marginal_quantile: shape must be positive");
    }
    check_unit_open(u, "gamma_marginal_quantile: u");
    // u^{1/a} = exp(log(u)/a); 1 - u^{1/a} = -expm1(log(u)/a) avoids
    // cancellation when u is close to 1.
    const double w = std::log(u) / a;
    return std::exp(w) / (-std::expm1(w));
}

double gamma_conditional_mean(double a, double s) {
    if (!(a > 0.0) || !(s >= 0.0)) {
        throw ConfigError("gamma_conditional_mean: bad parameters");
    }
    return std::pow((1.0 + s) / (2.0 + s), a + 1.0);
}

double gamma_conditional_sample(RandomSource& rng, double a, double s) {
    if (!(a > 0.0) || !(s >= 0.0)) {
        throw ConfigError("gamma_conditional_sample: bad parameters");
    }
    const double x = sample_gamma(rng, a + 1.0, 1.0 + s);
    return std::min(std::max(std::exp(-x), kTiny), kBelowOne);
}

double gamma_log_density_singular_int(int a, double u, double v) {
    check_shape_int(a);
    check_unit_open(u, "density argument u");
    check_unit_open(v, "density argument v");
    const double lu = -std::log(u);
    const double lv = -std::log(v);
    const double big_l = lu + lv;
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(a) + 2);
    const double log_l = std::log(big_l);
    const double norm = std::lgamma(static_cast<double>(a) + 1.0) +
                        std::lgamma(static_cast<double>(a));
    for (int i = 0; i <= a + 1; ++i) {
        terms.push_back(log_binom(a + 1, i) +
                        std::lgamma(static_cast<double>(a + i)) - norm +
                        static_cast<double>(a + 1 - i) * log_l);
    }
    return static_cast<double>(a) * (std::log(lu) + std::log(lv)) -
           (2.0 * a + 1.0) * log_l + logsumexp(terms);
}

double gamma_density_singular_int(int a, double u, double v) {
    return std::exp(gamma_log_density_singular_int(a, u, v));
}

double gamma_log_density_singular_quad(double a, double u, double v,
                                       double rel_tol) {
    if (!(a > 0.0)) {
        throw ConfigError("shape parameter must be positive");
    }
    check_unit_open(u, "density argument u");
    check_unit_open(v, "density argument v");
    const double lu = -std::log(u);
    const double lv = -std::log(v);
    const double big_l = lu + lv;
    const double da = a;

    // Integrand exponent g(s) = (a-1) log s + (a+1) log(1+s) - L s.
    // Its maximiser solves L s^2 + (L - 2a) s - (a - 1) = 0; factoring
    // exp(g(s*)) out keeps the numerical integral O(1).
    const double disc = (big_l - 2.0 * da) * (big_l - 2.0 * da) +
                        4.0 * big_l * (da - 1.0);
    double s_star =
        ((2.0 * da - big_l) + std::sqrt(std::max(disc, 0.0))) / (2.0 * big_l);
    s_star = std::max(s_star, 1e-8);
    const auto g = [&](double s) {
        return (da - 1.0) * std::log(s) + (da + 1.0) * std::log1p(s) -
               big_l * s;
    };
    const double g_star = g(s_star);
    const QuadResult integral = quad_semi_infinite(
        [&](double s) {
            if (s <= 0.0) return 0.0;
            return std::exp(g(s) - g_star);
        },
        0.0, rel_tol);

    return da * (std::log(lu) + std::log(lv)) -
           std::lgamma(da) - std::lgamma(da + 1.0) + g_star +
           std::log(integral.value);
}

double gamma_density_singular_quad(double a, double u, double v,
                                   double rel_tol) {
    return std::exp(gamma_log_density_singular_quad(a, u, v, rel_tol));
}

SampleBatch gamma_sample(const GammaParams& params, const DriverSpec& driver,
                         long count, RandomSource& rng) {
    if (params.dim() != driver.dim()) {
        throw ConfigError(
            "gamma_sample: parameter and driver dimensions differ");
    }
    if (count < 0) {
        throw ConfigError("gamma_sample: count must be nonnegative");
    }
    const int d = params.dim();
    DriverSampler sampler(driver);
    SampleBatch batch;
    batch.latents.resize(count, d);
    batch.values.resize(count, d);
    if (driver.is_patchwork()) {
        batch.cells.resize(static_cast<std::size_t>(count));
    }
    std::vector<double> row(static_cast<std::size_t>(d));
    for (long i = 0; i < count; ++i) {
        // Driver coordinates and conditional draws are interleaved per
        // row, so chunked calls on one stream concatenate identically
        // to a single large call.
        const int cell = sampler.draw_row(rng, row.data());
        if (!batch.cells.empty()) {
            batch.cells[static_cast<std::size_t>(i)] = cell;
        }
        for (int k = 0; k < d; ++k) {
            const double ak = params.a[static_cast<std::size_t>(k)];
            const double s =
                gamma_marginal_quantile(ak, row[static_cast<std::size_t>(k)]);
            batch.latents(i, k) = s;
            batch.values(i, k) = gamma_conditional_sample(rng, ak, s);
        }
    }
    batch.seed = rng.seed();
    batch.stream = rng.stream();
    batch.driver_label = driver.label();
    batch.family_label = params.label();
    return batch;
}

SampleBatch gamma_sample(const GammaParams& params, const DriverSpec& driver,
                         long count, std::uint64_t seed, std::uint64_t stream) {
    RandomSource rng(seed, stream);
    return gamma_sample(params, driver, count, rng);
}

}  // namespace puc
