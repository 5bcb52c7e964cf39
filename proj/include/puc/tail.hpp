#pragma once

#include <string>
#include <utility>

#include "puc/batch.hpp"
#include "puc/rational.hpp"

namespace puc {

/// Log of the negative-binomial-mixture pair density
///
///   c(u,v) = (a+1) ((1-u)(1-v))^a / (1-uv)^{2a+1}
///            * sum_{i=0}^{a-1} C(a-1,i) C(a+1,i) (uv)^i,
///
/// with 1-uv evaluated as h+g-hg (h=1-u, g=1-v) so nothing cancels as
/// u,v -> 1, and the sum accumulated in log space.
double nb_log_density(int a, double u, double v);
double nb_density(int a, double u, double v);

/// Ratio of the negative-binomial density to the gamma-family singular
/// density at the same point; tends to 1 in the upper corner.
double ratio_nb_gamma(int a, double u, double v);

/// Both sides of the half-binomial sum identity
///   sum_{k=0}^{m} C(m+k-1,k) / 2^k  =  ( C(2m,m) + 4^m ) / 2^{m+1},
/// evaluated in exact rational arithmetic (valid for 1 <= m <= 40
/// before 128-bit overflow).
std::pair<Rational, Rational> binomial_half_sum(int m);

/// Vandermonde convolution sum_{i=0}^{a-1} C(a+1,i) C(a-1,a-1-i),
/// computed exactly; equals C(2a,a-1).  Valid for 1 <= a <= 63.
u128 vandermonde_sum(int a);

/// Upper tail-dependence coefficient of the diagonally dominant gamma
/// construction, closed form:  1 - C(2a,a)/4^a.
double lambda_upper_gamma_analytic(int a);

/// The same coefficient via its integral representation
///   a * int_0^inf ( F_{a+1}(z) / z )^2 dz,
/// where F_{a+1} is the standard Gamma(a+1) CDF.  Kept as an
/// independent route so each validates the other.
double lambda_upper_gamma_quadrature(int a, double rel_tol = 1e-9);

enum class TailSide { lower, upper };

/// Empirical joint tail mass of one coordinate pair:
///   upper: P(V_j > t, V_k > t) / (1-t)
///   lower: P(V_j <= t, V_k <= t) / t
/// with the binomial standard error of the scaled proportion.
struct TailEstimate {
    double threshold = 0.0;
    TailSide side = TailSide::upper;
    long long joint_count = 0;
    long long sample_count = 0;
    double value = 0.0;
    double std_err = 0.0;
    /// Set when the expected number of tail points (N*(1-t) upper,
    /// N*t lower) falls below 50 — the estimate is then too noisy to
    /// interpret and callers should surface a warning.
    bool low_count = false;
};

/// Builds an estimate from externally accumulated counts (for chunked
/// simulation where batches are never materialized together).
TailEstimate tail_from_counts(double threshold, TailSide side,
                              long long joint_count, long long sample_count);

/// Counts joint exceedances of columns j and k in a batch.
TailEstimate empirical_tail(const SampleBatch& batch, int j, int k,
                            double threshold, TailSide side);

}  // namespace puc
