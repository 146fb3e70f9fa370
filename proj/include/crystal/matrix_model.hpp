#pragma once

#include <vector>

#include "crystal/laurent.hpp"
#include "crystal/series.hpp"

namespace crystal {

struct MatrixModelResult {
    TruncatedSeries value;
    int stabilized_at;
    std::vector<TruncatedSeries> history;  // history[k] is the determinant at N = first_n + k
    int first_n;
};

/// Θ(z|q) = ∏_{k≥0} (1 + z q^k)(1 + z⁻¹ q^{k+1}) in one variable, window D + 1.
LaurentSymbol c3_symbol(int D);

/// Θ(z|q) / Θ(Qz|q) · ∏_{k=1}^{n} (1 + Q⁻¹ z⁻¹ q^k) with q = q0 q1, Q = −q1.
LaurentSymbol conifold_symbol(int n, int D);

/// ∏_{k≥0} (1 + q^k z)/(1 − q^k q1 z) · ∏_{k≥0} (1 + q^{k+1} z⁻¹)/(1 − q^{k+1} q1⁻¹ z⁻¹),
/// expanded with geometric series rather than symbol inversion.
LaurentSymbol conifoldf_direct(int D);

/// C_n = ∏_{k≤n} (1 − q^k)^{−k} · ∏_{k>n} ((1 − Q⁻¹ q^k)/(1 − q^k))ⁿ, same parameters.
TruncatedSeries prefactor_cn(int n, int D);

/// det_{N×N} G_{i−j} for N = D+1, D+2, … until two consecutive sizes agree.
/// Throws stabilization_failure past N = 4(D + 2).
MatrixModelResult stabilized_toeplitz(const LaurentSymbol& f, int D);

} // namespace crystal
