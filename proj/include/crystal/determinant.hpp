#pragma once

#include <optional>
#include <vector>

#include "crystal/series.hpp"

namespace crystal {

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

/// Determinant over the truncated ring. Eliminates with unit pivots (the
/// inverse of a unit is exact in the ring) and falls back to Berkowitz on the
/// remaining block when no unit pivot is left. No exact division is used.
TruncatedSeries determinant(const SeriesMatrix& m);

/// Berkowitz characteristic-polynomial algorithm, division free.
TruncatedSeries berkowitz_determinant(const SeriesMatrix& m);

/// Plain Gaussian elimination with unit pivots only; nullopt if it gets stuck.
std::optional<TruncatedSeries> unit_pivot_determinant(const SeriesMatrix& m);

} // namespace crystal
