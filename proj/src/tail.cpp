#include "puc/tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "puc/gamma_copula.hpp"
#include "puc/quadrature.hpp"
#include "puc/special.hpp"

namespace puc {
namespace {

void check_shape(int a, int max_a) {
    if (a < 1 || a > max_a) {
        throw ConfigError("shape outside supported integer range");
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

double nb_log_density(int a, double u, double v) {
    check_shape(a, std::numeric_limits<int>::max());
    if (!(u > 0.0 && u < 1.0) || !(v > 0.0 && v < 1.0)) {
        throw ConfigError("density arguments must lie strictly in (0,1)");
    }
    const double h = 1.0 - u;
    const double g = 1.0 - v;
    const double one_minus_uv = h + g - h * g;
    const double log_uv = std::log(u) + std::log(v);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i <= a - 1; ++i) {
        terms.push_back(log_binom(a - 1, i) + log_binom(a + 1, i) +
                        static_cast<double>(i) * log_uv);
    }
    return std::log(static_cast<double>(a) + 1.0) +
           static_cast<double>(a) * (std::log(h) + std::log(g)) -
           (2.0 * a + 1.0) * std::log(one_minus_uv) + logsumexp(terms);
}

double nb_density(int a, double u, double v) {
    return std::exp(nb_log_density(a, u, v));
}

double ratio_nb_gamma(int a, double u, double v) {
    return std::exp(nb_log_density(a, u, v) -
                    gamma_log_density_singular_int(a, u, v));
}

std::pair<Rational, Rational> binomial_half_sum(int m) {
    check_shape(m, 40);
    Rational lhs(0);
    for (int k = 0; k <= m; ++k) {
        const u128 coeff = binom_u128(m + k - 1, k);
        lhs = lhs + Rational(static_cast<i128>(coeff),
                             static_cast<i128>(u128{1} << k));
    }
    const i128 central = static_cast<i128>(binom_u128(2 * m, m));
    const i128 four_pow = static_cast<i128>(u128{1} << (2 * m));
    const Rational rhs(central + four_pow,
                       static_cast<i128>(u128{1} << (m + 1)));
    return {lhs, rhs};
}

u128 vandermonde_sum(int a) {
    check_shape(a, 63);
    u128 total = 0;
    for (int i = 0; i <= a - 1; ++i) {
        total += binom_u128(a + 1, i) * binom_u128(a - 1, a - 1 - i);
    }
    return total;
}

double lambda_upper_gamma_analytic(int a) {
    check_shape(a, std::numeric_limits<int>::max());
    return 1.0 - central_binom_ratio(static_cast<unsigned>(a));
}

double lambda_upper_gamma_quadrature(int a, double rel_tol) {
    check_shape(a, 170);
    const QuadResult integral = quad_semi_infinite(
        [a](double z) {
            if (z <= 0.0) return 0.0;
            const double f = gamma_cdf_int(a + 1, z) / z;
            return f * f;
        },
        0.0, rel_tol);
    return static_cast<double>(a) * integral.value;
}

TailEstimate tail_from_counts(double threshold, TailSide side,
                              long long joint_count, long long sample_count) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw ConfigError("tail threshold must lie strictly in (0,1)");
    }
    if (sample_count <= 0 || joint_count < 0 || joint_count > sample_count) {
        throw ConfigError("tail counts are inconsistent");
    }
    const double n = static_cast<double>(sample_count);
    const double p_hat = static_cast<double>(joint_count) / n;
    const double scale =
        side == TailSide::upper ? 1.0 - threshold : threshold;
    TailEstimate est;
    est.threshold = threshold;
    est.side = side;
    est.joint_count = joint_count;
    est.sample_count = sample_count;
    est.value = p_hat / scale;
    est.std_err = std::sqrt(p_hat * (1.0 - p_hat) / n) / scale;
    est.low_count = n * scale < 50.0;
    return est;
}

TailEstimate empirical_tail(const SampleBatch& batch, int j, int k,
                            double threshold, TailSide side) {
    if (j < 0 || k < 0 || j >= batch.cols() || k >= batch.cols()) {
        throw ConfigError("empirical_tail: column index out of range");
    }
    long long joint = 0;
    for (long i = 0; i < batch.rows(); ++i) {
        const double x = batch.values(i, j);
        const double y = batch.values(i, k);
        if (side == TailSide::upper) {
            joint += (x > threshold && y > threshold) ? 1 : 0;
        } else {
            joint += (x <= threshold && y <= threshold) ? 1 : 0;
        }
    }
    return tail_from_counts(threshold, side, joint,
                            static_cast<long long>(batch.rows()));
}

}  // namespace puc
