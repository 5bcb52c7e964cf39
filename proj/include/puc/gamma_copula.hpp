#pragma once

#include <cstdint>
#include <vector>

#include "puc/batch.hpp"
#include "puc/driver.hpp"
#include "puc/rng.hpp"

namespace puc {

/// Per-coordinate shape parameters of the gamma latent family; every
/// entry must be positive.
struct GammaParams {
    std::vector<double> a;

    explicit GammaParams(std::vector<double> shapes);
    [[nodiscard]] int dim() const { return static_cast<int>(a.size()); }
    [[nodiscard]] std::string label() const;
};

/// Latent location density on (0, inf):  a s^{a-1} / (1+s)^{a+1}.
double gamma_alpha(double a, double s);

/// Latent location CDF:  A(s) = (s/(1+s))^a.
double gamma_marginal_cdf(double a, double s);

/// Inverse of A, evaluated stably for u near 0 and 1:
/// Q(u) = u^{1/a} / (1 - u^{1/a}).
double gamma_marginal_quantile(double a, double u);

/// Mean of the conditional component given location s, i.e. E[exp(-X)]
/// for X ~ Gamma(a+1, rate 1+s):  ((1+s)/(2+s))^{a+1}.
double gamma_conditional_mean(double a, double s);

/// One draw of the conditional component at location s: V = exp(-X),
/// X ~ Gamma(a+1, rate 1+s).  Output clamped strictly inside (0,1).
double gamma_conditional_sample(RandomSource& rng, double a, double s);

/// Log of the pair density along the diagonally dominant (comonotone
/// latent) construction, closed form for integer shape a:
///
///   log c(u,v) = a log(log u * log v) - (2a+1) log L + log S,
///   L = -(log u + log v),
///   S = sum_{i=0}^{a+1} C(a+1,i) (a+i-1)! / (a! (a-1)!) L^{a+1-i},
///
/// evaluated with log-space term accumulation so large shapes do not
/// overflow.
double gamma_log_density_singular_int(int a, double u, double v);
double gamma_density_singular_int(int a, double u, double v);

/// Same density by direct numerical integration over the latent
/// location (an independent route kept deliberately separate from the
/// closed form so each validates the other):
///
///   c(u,v) = (log u * log v)^a / (G(a) G(a+1))
///            * int_0^inf s^{a-1} (1+s)^{a+1} (uv)^s ds.
double gamma_log_density_singular_quad(double a, double u, double v,
                                       double rel_tol = 1e-10);
double gamma_density_singular_quad(double a, double u, double v,
                                   double rel_tol = 1e-10);

/// Two-step simulation: draw U from the driver, map each coordinate to
/// its latent location S_k = Q_k(U_k), then draw V_k from the
/// conditional law at S_k.  The overload taking a RandomSource
/// continues that stream (chunked calls concatenate identically to one
/// large call).
SampleBatch gamma_sample(const GammaParams& params, const DriverSpec& driver,
                         long count, RandomSource& rng);
SampleBatch gamma_sample(const GammaParams& params, const DriverSpec& driver,
                         long count, std::uint64_t seed,
                         std::uint64_t stream = 0);

}  // namespace puc
