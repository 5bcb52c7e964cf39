#pragma once

#include <cmath>

#include "puc/errors.hpp"
#include "puc/rng.hpp"

namespace puc {

/// Draws one Gamma(shape, rate) variate using the Marsaglia-Tsang
/// squeeze method.  Shapes below one are handled with the standard
/// boosting trick (sample at shape+1, scale by U^{1/shape}).
inline double sample_gamma(RandomSource& rng, double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
        throw ConfigError("sample_gamma: shape and rate must be positive");
    }
    double boost = 1.0;
    if (shape < 1.0) {
        // U^{1/shape} via exp(log(U)/shape); U in (0,1) so this is safe.
        boost = std::exp(std::log(rng.next_uniform()) / shape);
        shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = rng.next_std_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return boost * d * v / rate;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return boost * d * v / rate;
        }
    }
}

/// Chi-square with `dof` degrees of freedom, via Gamma(dof/2, 1/2).
inline double sample_chi_square(RandomSource& rng, double dof) {
    if (!(dof > 0.0)) {
        throw ConfigError("sample_chi_square: dof must be positive");
    }
    return sample_gamma(rng, 0.5 * dof, 0.5);
}

}  // namespace puc
