#pragma once

#include <Eigen/Dense>
#include <vector>

namespace puc {

/// Correlation matrix with validated shape: square, symmetric, unit
/// diagonal, entries in [-1, 1].  Positive semi-definiteness is checked at
/// factorization time (psd_factor), not at construction, so callers can
/// build candidate matrices and get a precise error from the factorization.
class CovMatrix {
  public:
    explicit CovMatrix(Eigen::MatrixXd m);

    /// dim x dim matrix with 1 on the diagonal and rho everywhere else.
    static CovMatrix equicorrelation(int dim, double rho);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

  private:
    Eigen::MatrixXd m_;
};

/// Factor L with L * L^T equal to the correlation matrix, computed from the
/// eigendecomposition with eigenvalues clamped at zero (tolerance -1e-10;
/// anything more negative raises NumericError).  Columns are ordered by
/// descending eigenvalue and scaled by sqrt(eigenvalue), so rank-deficient
/// matrices come out exactly: the comonotone (all-ones) matrix maps every
/// coordinate to the same normal draw, and the 2-d antithetic matrix
/// [[1,-1],[-1,1]] maps them to (z, -z).
Eigen::MatrixXd psd_factor(const CovMatrix& m);

/// Pairwise Pearson correlation matrix of the given columns.  With
/// log_scale the correlations are computed on the logs (observations
/// must then be positive).
CovMatrix empirical_correlations(
    const std::vector<std::vector<double>>& columns, bool log_scale);

}  // namespace puc
