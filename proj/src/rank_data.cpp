#include "puc/rank_data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "puc/stats.hpp"

namespace puc {

RankData::RankData(std::vector<std::vector<int>> ranks, int tie_count)
    : ranks_(std::move(ranks)), tie_count_(tie_count) {
    if (ranks_.empty()) {
        throw ConfigError("RankData: no columns");
    }
    const std::size_t n = ranks_.front().size();
    if (n == 0) {
        throw ConfigError("RankData: empty columns");
    }
    for (const auto& col : ranks_) {
        if (col.size() != n) {
            throw ConfigError("RankData: ragged columns");
        }
        std::vector<bool> seen(n, false);
        for (int r : col) {
            if (r < 1 || static_cast<std::size_t>(r) > n ||
                seen[static_cast<std::size_t>(r - 1)]) {
                throw ConfigError(
                    "RankData: column is not a permutation of 1..n");
            }
            seen[static_cast<std::size_t>(r - 1)] = true;
        }
    }
}

RankData ranks_from_data(const std::vector<std::vector<double>>& columns) {
    if (columns.empty() || columns.front().size() < 2) {
        throw ConfigError("ranks_from_data: need at least 2 observations");
    }
    int ties = 0;
    std::vector<std::vector<int>> ranks;
    ranks.reserve(columns.size());
    for (const auto& col : columns) {
        for (double v : col) {
            if (!std::isfinite(v)) {
                throw ConfigError("ranks_from_data: non-finite observation");
            }
        }
        const double first = col.front();
        bool constant = true;
        for (double v : col) {
            if (v != first) {
                constant = false;
                break;
            }
        }
        if (constant) {
            throw NumericError("ranks_from_data: constant column");
        }
        // Count tied pairs among adjacent sorted values.
        std::vector<double> sorted(col);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1]) {
                ++ties;
            }
        }
        ranks.push_back(stable_ranks(col));
    }
    return RankData(std::move(ranks), ties);
}

}  // namespace puc
