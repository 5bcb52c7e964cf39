#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace puc {

/// A block of Monte Carlo output: one row per simulation, one column per
/// coordinate.  `values` holds the copula sample V in (0,1)^d and
/// `latents` the latent location S drawn for each row/column.  `cells`
/// records the patchwork cell index J per row when the driver is a
/// patchwork (empty otherwise).
struct SampleBatch {
    Eigen::MatrixXd values;
    Eigen::MatrixXd latents;
    std::vector<int> cells;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string driver_label;
    std::string family_label;

    [[nodiscard]] long rows() const { return values.rows(); }
    [[nodiscard]] long cols() const { return values.cols(); }

    /// One column as a plain vector (for rank/KS style statistics).
    [[nodiscard]] std::vector<double> column(long j) const {
        std::vector<double> out(static_cast<std::size_t>(values.rows()));
        for (long i = 0; i < values.rows(); ++i) {
            out[static_cast<std::size_t>(i)] = values(i, j);
        }
        return out;
    }
};

}  // namespace puc
