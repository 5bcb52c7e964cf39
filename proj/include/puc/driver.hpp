#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "puc/cov.hpp"
#include "puc/rank_data.hpp"
#include "puc/rng.hpp"

namespace puc {

/// Output of a driver draw: `u` has one row per simulation and one
/// column per coordinate, each entry strictly inside (0,1).  For
/// patchwork drivers, `cells` records the uniformly chosen cell index
/// (0-based observation number) per row; empty otherwise.
struct DriverSample {
    Eigen::MatrixXd u;
    std::vector<int> cells;
};

/// Describes a dependence driver: either an empirical patchwork
/// built on the rank matrix of an observed sample (each observation
/// owns a 1/n-wide cell per axis, filled with a Gaussian-copula block),
/// or a parametric copula (Gaussian or Student t).
///
/// Patchwork cell blocks:
///   - rook:          independent inside each cell (identity block)
///   - upper_frechet: comonotone inside each cell (all-ones block)
///   - lower_frechet: countermonotone inside each cell (2-dim only)
///   - correlated:    equicorrelated Gaussian block with parameter rho
class DriverSpec {
public:
    enum class Kind {
        rook,
        upper_frechet,
        lower_frechet,
        patchwork_rho,
        gaussian,
        student_t,
    };

    static DriverSpec rook(RankData ranks);
    static DriverSpec upper_frechet(RankData ranks);
    static DriverSpec lower_frechet(RankData ranks);
    static DriverSpec patchwork(RankData ranks, double rho);
    static DriverSpec gaussian(CovMatrix sigma);
    static DriverSpec student_t(CovMatrix sigma, double dof);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int dim() const;
    [[nodiscard]] std::string label() const;
    [[nodiscard]] bool is_patchwork() const;
    [[nodiscard]] const RankData& ranks() const;
    [[nodiscard]] double dof() const { return dof_; }
    [[nodiscard]] double rho() const { return rho_; }

    /// The Gaussian block used inside each patchwork cell, or the
    /// parametric correlation matrix itself.
    [[nodiscard]] const CovMatrix& block() const { return block_; }

private:
    DriverSpec(Kind kind, std::shared_ptr<const RankData> ranks,
               CovMatrix block, double rho, double dof);

    Kind kind_;
    std::shared_ptr<const RankData> ranks_;
    CovMatrix block_;
    double rho_ = 0.0;
    double dof_ = 0.0;
};

/// Row-streaming sampler: precomputes the Gaussian factor once, then
/// fills one row per call.  Rows consume the RandomSource sequentially,
/// so a given (seed, stream) yields the same concatenated output
/// whether callers draw one large batch or several small ones.
class DriverSampler {
public:
    explicit DriverSampler(DriverSpec spec);

    [[nodiscard]] int dim() const { return spec_.dim(); }
    [[nodiscard]] const DriverSpec& spec() const { return spec_; }

    /// Writes dim() driver coordinates (strictly inside (0,1)) to `u`.
    /// Returns the patchwork cell index, or -1 for parametric drivers.
    int draw_row(RandomSource& rng, double* u);

private:
    DriverSpec spec_;
    Eigen::MatrixXd factor_;
    Eigen::VectorXd z_;
    Eigen::VectorXd x_;
};

/// Draws `count` rows from the driver in one batch.
DriverSample sample_driver(const DriverSpec& spec, long count,
                           RandomSource& rng);

}  // namespace puc
