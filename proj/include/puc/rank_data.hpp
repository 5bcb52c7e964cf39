#pragma once

#include <vector>

#include "puc/errors.hpp"

namespace puc {

/// Rank matrix of an observed sample: `ranks[k][i]` is the rank (1..n) of
/// observation i in column k.  Every column must be a permutation of
/// 1..n; construction validates this.  Ties in the source data are broken
/// by first occurrence, and the number of tied pairs encountered while
/// ranking is recorded.
class RankData {
public:
    RankData(std::vector<std::vector<int>> ranks, int tie_count);

    [[nodiscard]] int dim() const { return static_cast<int>(ranks_.size()); }
    [[nodiscard]] int count() const {
        return ranks_.empty() ? 0 : static_cast<int>(ranks_.front().size());
    }
    [[nodiscard]] int tie_count() const { return tie_count_; }
    [[nodiscard]] const std::vector<int>& column(int k) const {
        return ranks_.at(static_cast<std::size_t>(k));
    }

private:
    std::vector<std::vector<int>> ranks_;
    int tie_count_;
};

/// Builds RankData from raw observations (one inner vector per column).
/// A constant column cannot be ranked meaningfully and raises NumericError.
RankData ranks_from_data(const std::vector<std::vector<double>>& columns);

}  // namespace puc
