#pragma once

#include <cstdint>
#include <vector>

#include "puc/batch.hpp"
#include "puc/driver.hpp"
#include "puc/rng.hpp"

namespace puc {

/// Per-coordinate exponents of the power latent family; every entry
/// must exceed 2 (the latent density is undefined otherwise).
struct PowerParams {
    std::vector<double> beta;

    explicit PowerParams(std::vector<double> exponents);
    [[nodiscard]] int dim() const { return static_cast<int>(beta.size()); }
    [[nodiscard]] std::string label() const;
};

/// Latent location density on (0,1):
///   alpha(s) = beta/(beta-2) * D(s),  D(s) = 1 - s^{beta-1} - (1-s)^{beta-1}.
double power_alpha(double beta, double s);

/// Latent location CDF:
///   A(s) = ((1-s)^beta - s^beta + beta s - 1) / (beta - 2).
double power_marginal_cdf(double beta, double s);

/// Conditional CDF of the component V given location s, in v:
///   v <= s:  (1-s)^{beta-1} [ (1-v)^{2-beta} - 1 ] / D(s)
///   v >  s:  [ 1 - (1-s)^{beta-1} - s^{beta-1} v^{2-beta} ] / D(s).
double power_conditional_cdf(double beta, double s, double v);

/// Value of the conditional CDF at v = s (the branch point).
double power_conditional_split(double beta, double s);

/// Inverse of the conditional CDF, stable for extreme p and s; output
/// clamped strictly inside (0,1).
double power_conditional_quantile(double beta, double s, double p);

/// Tabulated inverse of the latent CDF A: a uniform grid bracket
/// followed by Newton/bisection polish to |A(s) - u| <= 1e-10.
/// Results are clamped to [1e-12, 1-1e-12] so downstream conditionals
/// never see a degenerate location.
class PowerMarginalTable {
public:
    explicit PowerMarginalTable(double beta, int points = 4097);

    [[nodiscard]] double beta() const { return beta_; }
    [[nodiscard]] double invert(double u) const;

private:
    double beta_;
    std::vector<double> grid_a_;
};

/// Two-step simulation mirroring gamma_sample: driver coordinates map
/// through the tabulated inverse latent CDF, then one conditional
/// quantile draw per coordinate.  Chunked calls on one RandomSource
/// concatenate identically to a single large call.
SampleBatch power_sample(const PowerParams& params, const DriverSpec& driver,
                         long count, RandomSource& rng);
SampleBatch power_sample(const PowerParams& params, const DriverSpec& driver,
                         long count, std::uint64_t seed,
                         std::uint64_t stream = 0);

}  // namespace puc
