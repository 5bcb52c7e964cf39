#pragma once

#include <cstdint>
#include <string_view>

#include "puc/csv.hpp"

namespace puc {

/// Raw CSV bytes of the two bundled example data sets (stable across
/// platforms, suitable for content hashing).
std::string_view dataset_a_csv();
std::string_view dataset_b_csv();

/// Parsed bundled data sets.  Dataset A: 20 paired observations for the
/// two-dimensional examples.  Dataset B: 20 years of losses across 19
/// areas, used by the risk-aggregation case study.
const Table& dataset_a();
const Table& dataset_b();

/// Lookup by name "A"/"B" (case-insensitive); ConfigError otherwise.
const Table& bundled_dataset(std::string_view name);

/// FNV-1a 64-bit content hash (used to pin the bundled bytes in tests).
std::uint64_t fnv1a64(std::string_view text);

}  // namespace puc
