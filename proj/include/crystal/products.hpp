#pragma once

#include "crystal/series.hpp"

namespace crystal {

/// M(q) = ∏_{k≥1} (1 − q^k)^{−k} in one variable.
TruncatedSeries macmahon(int D);

/// M(q)² ∏_{k≥1}(1 + q^k Q)^k ∏_{k>n}(1 + q^k Q⁻¹)^k with q = q0 q1, Q = q1.
TruncatedSeries conifold_product(int n, int D);

/// The k-th factor (1 + q^k Q⁻¹)^k = (1 + q0^k q1^{k−1})^k in (q0, q1).
TruncatedSeries conifold_wall_factor(int k, int D);

/// [Z_top^SPP]² = ∏ (1 − Q q^k)^{2k} (1 − μ q^k)^{2k} / [(1 − q^k)^{3k} (1 − μ Q q^k)^{2k}]
/// with μ = Q⁻¹qⁿ. Parameters follow the matrix-model convention q = q0 q1,
/// Q = −q1, so μ = −q0ⁿ q1^{n−1}. Requires n ≥ 1.
TruncatedSeries spp_top_squared(int n, int D);

/// ∏_{k≥1} (1 − q^k)^k with q = q0 q1.
TruncatedSeries inverse_macmahon_conifold(int D);

/// Substitute q ↦ q0 q1 into a one-variable series.
TruncatedSeries to_conifold_variables(const TruncatedSeries& one_var, int D);

/// Set q0 = q1 = q (total degree in the result equals total degree before).
TruncatedSeries collapse_variables(const TruncatedSeries& s);

} // namespace crystal
