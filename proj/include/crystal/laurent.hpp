#pragma once

#include <vector>

#include "crystal/series.hpp"

namespace crystal {

/// Σ_{|n| ≤ W} G_n zⁿ with truncated-series coefficients.
class LaurentSymbol {
public:
    LaurentSymbol(int num_vars, int cutoff, int window);

    static LaurentSymbol one(int num_vars, int cutoff, int window);
    /// c + d·z^shift
    static LaurentSymbol binomial(const TruncatedSeries& c, const TruncatedSeries& d, int shift,
                                  int window);

    int num_vars() const noexcept { return num_vars_; }
    int cutoff() const noexcept { return cutoff_; }
    int window() const noexcept { return window_; }

    /// Zero series outside the window.
    TruncatedSeries coefficient(int n) const;
    const TruncatedSeries& at(int n) const;
    TruncatedSeries& at(int n);

    /// Throws window_overflow if the product has a non-zero coefficient
    /// outside the window.
    LaurentSymbol operator*(const LaurentSymbol& other) const;
    LaurentSymbol& operator*=(const LaurentSymbol& other) { return *this = *this * other; }

    /// Inverse when the z⁰ coefficient is a unit and every other coefficient
    /// of f·G₀⁻¹ has no constant term.
    LaurentSymbol inverse() const;

    /// z ↦ z⁻¹
    LaurentSymbol reflected() const;

    /// Smallest W' such that all coefficients outside [−W', W'] vanish.
    int support_radius() const;

    friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b);

private:
    int num_vars_;
    int cutoff_;
    int window_;
    std::vector<TruncatedSeries> coeffs_;  // index n + window
};

/// G_n, zero when |n| > W.
TruncatedSeries symbol_coefficient(const LaurentSymbol& f, int n);

/// The N×N Toeplitz matrix T_ij = G_{i−j}.
std::vector<std::vector<TruncatedSeries>> toeplitz_matrix(const LaurentSymbol& f, int N);

/// det_{1 ≤ i,j ≤ N} G_{i−j}.
TruncatedSeries toeplitz_det(const LaurentSymbol& f, int N);

} // namespace crystal
