#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "puc/errors.hpp"

namespace puc {

struct QuadResult {
    double value;
    double abs_error;  // estimated
    int panels;        // number of accepted panels
};

namespace quad_detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// mapped onto [-1, 1].  The |G7 - K15| difference drives panel refinement.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod(const F& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fk[15];
    for (int i = 0; i < 7; ++i) {
        fk[i] = f(c - h * kKronrodNodes[i]);
        fk[14 - i] = f(c + h * kKronrodNodes[i]);
    }
    fk[7] = f(c);
    double kron = 0.0;
    for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fk[i] + fk[14 - i]);
    kron += kKronrodWeights[7] * fk[7];
    // Gauss points are the odd-indexed Kronrod nodes.
    double gauss = kGaussWeights[3] * fk[7];
    for (int i = 0; i < 3; ++i)
        gauss += kGaussWeights[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
    value = kron * h;
    err = std::fabs((kron - gauss) * h);
    if (!std::isfinite(value))
        throw NumericError("quadrature: integrand produced a non-finite value");
}

struct Panel {
    double a, b, value, err;
};

}  // namespace quad_detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
/// Panels are bisected worst-error-first until the summed error estimate
/// drops below rel_tol * |integral|; exceeding max_panels raises
/// QuadratureError carrying the partial estimate.
template <class F>
QuadResult quad_finite(const F& f, double a, double b, double rel_tol,
                       int max_panels = 1 << 16) {
    if (!(rel_tol > 1e-12 && rel_tol < 1e-2))
        throw ConfigError("quadrature: rel_tol must lie in (1e-12, 1e-2)");
    if (!(a < b)) throw ConfigError("quadrature: need a < b");

    std::vector<quad_detail::Panel> panels;
    panels.reserve(256);
    double v, e;
    quad_detail::gauss_kronrod(f, a, b, v, e);
    panels.push_back({a, b, v, e});

    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        const double target =
            rel_tol * std::max(std::fabs(total), 1e-300);
        if (err <= target)
            return {total, err, static_cast<int>(panels.size())};
        if (static_cast<int>(panels.size()) >= max_panels)
            throw QuadratureError(
                "quadrature: did not converge within the panel budget", total,
                static_cast<int>(panels.size()));

        const quad_detail::Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        quad_detail::Panel left{p.a, mid, 0, 0}, right{mid, p.b, 0, 0};
        quad_detail::gauss_kronrod(f, left.a, left.b, left.value, left.err);
        quad_detail::gauss_kronrod(f, right.a, right.b, right.value, right.err);
        panels[worst] = left;
        panels.push_back(right);
    }
}

/// Adaptive integral of f over (lower, infinity), via the rational map
/// z = lower + t/(1-t) that compresses the tail onto t in (0,1).  The
/// integrand must decay fast enough to be integrable; an integrable
/// endpoint singularity at the lower limit is handled by refinement (the
/// Kronrod nodes never touch panel endpoints).
template <class F>
QuadResult quad_semi_infinite(const F& f, double lower, double rel_tol,
                              int max_panels = 1 << 16) {
    auto transformed = [&](double t) {
        const double om = 1.0 - t;
        const double z = lower + t / om;
        return f(z) / (om * om);
    };
    return quad_finite(transformed, 0.0, 1.0, rel_tol, max_panels);
}

}  // namespace puc
