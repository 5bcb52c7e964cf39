#include "puc/cov.hpp"

#include <cmath>
#include <string>

#include "puc/errors.hpp"
#include "puc/stats.hpp"

namespace puc {

CovMatrix::CovMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    const auto n = m_.rows();
    if (n == 0 || m_.cols() != n)
        throw ConfigError("correlation matrix must be square and non-empty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::fabs(m_(i, i) - 1.0) > 1e-12)
            throw ConfigError("correlation matrix must have a unit diagonal");
        for (Eigen::Index j = 0; j < i; ++j) {
            if (std::fabs(m_(i, j) - m_(j, i)) > 1e-12)
                throw ConfigError("correlation matrix must be symmetric");
            if (std::fabs(m_(i, j)) > 1.0 + 1e-12)
                throw ConfigError("correlation entries must lie in [-1, 1]");
        }
    }
}

CovMatrix CovMatrix::equicorrelation(int dim, double rho) {
    if (dim < 1) throw ConfigError("equicorrelation: dim must be >= 1");
    if (!(rho >= -1.0 && rho <= 1.0))
        throw ConfigError("equicorrelation: rho must lie in [-1, 1]");
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(dim, dim, rho);
    m.diagonal().setOnes();
    return CovMatrix(m);
}

Eigen::MatrixXd psd_factor(const CovMatrix& m) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix());
    if (solver.info() != Eigen::Success)
        throw NumericError("psd_factor: eigendecomposition failed");

    const auto& vals = solver.eigenvalues();   // ascending
    const auto& vecs = solver.eigenvectors();
    const int d = m.dim();

    Eigen::MatrixXd factor(d, d);
    for (int j = 0; j < d; ++j) {
        const double lambda = vals(d - 1 - j);  // descending order
        if (lambda < -1e-10)
            throw NumericError(
                "psd_factor: matrix is not positive semi-definite "
                "(eigenvalue " + std::to_string(lambda) + ")");
        const double scale = std::sqrt(std::max(lambda, 0.0));
        factor.col(j) = vecs.col(d - 1 - j) * scale;
    }

    // A correlation of exactly +-1 means the two coordinates are the same
    // (resp. opposite) functional of the draws; rows must then be identical
    // up to sign.  Copy rows so downstream samples are *bit*-identical, not
    // merely equal to rounding error.
    const auto& mm = m.matrix();
    for (int j = 1; j < d; ++j) {
        for (int i = 0; i < j; ++i) {
            if (mm(i, j) == 1.0) {
                factor.row(j) = factor.row(i);
                break;
            }
            if (mm(i, j) == -1.0) {
                factor.row(j) = -factor.row(i);
                break;
            }
        }
    }
    return factor;
}

CovMatrix empirical_correlations(
    const std::vector<std::vector<double>>& columns, bool log_scale) {
    const int d = static_cast<int>(columns.size());
    if (d < 2) {
        throw ConfigError("empirical_correlations: need at least 2 columns");
    }
    std::vector<std::vector<double>> work(columns.begin(), columns.end());
    if (log_scale) {
        for (auto& col : work) {
            for (auto& v : col) {
                if (!(v > 0.0)) {
                    throw ConfigError(
                        "empirical_correlations: log scale requires "
                        "positive observations");
                }
                v = std::log(v);
            }
        }
    }
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = 1.0;
        for (int j = 0; j < i; ++j) {
            const double r = pearson(work[static_cast<std::size_t>(i)],
                                     work[static_cast<std::size_t>(j)]);
            m(i, j) = r;
            m(j, i) = r;
        }
    }
    return CovMatrix(std::move(m));
}

}  // namespace puc
