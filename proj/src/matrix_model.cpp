#include "crystal/matrix_model.hpp"

#include "crystal/error.hpp"

namespace crystal {

namespace {

TruncatedSeries mono2(int a, int b, int D, long c = 1) {
    const std::vector<int> e{a, b};
    return TruncatedSeries::monomial(2, D, e, c);
}

void check(int n, int D) {
    if (D < 0) throw invalid_argument("degree must be non-negative");
    if (n < 0) throw invalid_argument("chamber index must be non-negative");
}

// 1 + c z^shift
LaurentSymbol one_plus(const TruncatedSeries& c, int shift, int W) {
    return LaurentSymbol::binomial(TruncatedSeries::one(c.num_vars(), c.cutoff()), c, shift, W);
}

// 1/(1 − a z^shift) = Σ_j a^j z^{j·shift}
LaurentSymbol geometric(const TruncatedSeries& a, int shift, int W) {
    LaurentSymbol f = LaurentSymbol::one(a.num_vars(), a.cutoff(), W);
    TruncatedSeries power = TruncatedSeries::one(a.num_vars(), a.cutoff());
    for (int j = 1;; ++j) {
        power *= a;
        if (power.is_zero()) break;
        if (j > W) throw window_overflow("geometric symbol factor exceeds the window");
        f.at(j * shift) += power;
    }
    return f;
}

// Θ(z|q) with q = q0 q1.
LaurentSymbol theta_conifold(int D, int W) {
    LaurentSymbol f = one_plus(TruncatedSeries::one(2, D), 1, W);
    for (int k = 1; 2 * k <= D; ++k) {
        f *= one_plus(mono2(k, k, D), 1, W);
        f *= one_plus(mono2(k, k, D), -1, W);
    }
    return f;
}

} // namespace

LaurentSymbol c3_symbol(int D) {
    check(0, D);
    const int W = D + 1;
    LaurentSymbol f = one_plus(TruncatedSeries::one(1, D), 1, W);
    for (int k = 1; k <= D; ++k) {
        const std::vector<int> e{k};
        const TruncatedSeries qk = TruncatedSeries::monomial(1, D, e);
        f *= one_plus(qk, 1, W);
        f *= one_plus(qk, -1, W);
    }
    return f;
}

LaurentSymbol conifold_symbol(int n, int D) {
    check(n, D);
    const int W = D + 1;
    LaurentSymbol f = theta_conifold(D, W);
    // Θ(Qz|q) = ∏_{k≥0} (1 − q0^k q1^{k+1} z)(1 − q0^{k+1} q1^k z⁻¹)
    LaurentSymbol shifted = LaurentSymbol::one(2, D, W);
    for (int k = 0; 2 * k + 1 <= D; ++k) {
        shifted *= one_plus(mono2(k, k + 1, D, -1), 1, W);
        shifted *= one_plus(mono2(k + 1, k, D, -1), -1, W);
    }
    f *= shifted.inverse();
    for (int k = 1; k <= n && 2 * k - 1 <= D; ++k) f *= one_plus(mono2(k, k - 1, D, -1), -1, W);
    return f;
}

LaurentSymbol conifoldf_direct(int D) {
    check(0, D);
    const int W = D + 1;
    LaurentSymbol f = theta_conifold(D, W);
    for (int k = 0; 2 * k + 1 <= D; ++k) {
        f *= geometric(mono2(k, k + 1, D), 1, W);
        f *= geometric(mono2(k + 1, k, D), -1, W);
    }
    return f;
}

TruncatedSeries prefactor_cn(int n, int D) {
    check(n, D);
    return product_over_k(
        [n, D](int k) {
            if (k <= n) return one_plus_power(mono2(k, k, D, -1), -k);
            TruncatedSeries f = one_plus_power(mono2(k, k - 1, D), n);
            f *= one_plus_power(mono2(k, k, D, -1), -n);
            return f;
        },
        2, D);
}

MatrixModelResult stabilized_toeplitz(const LaurentSymbol& f, int D) {
    if (D != f.cutoff()) throw dimension_error("stabilized_toeplitz: symbol truncated at a different degree");
    const int first = D + 1;
    const int cap = 4 * (D + 2);
    MatrixModelResult r{toeplitz_det(f, first), 0, {}, first};
    r.history.push_back(r.value);
    for (int N = first + 1; N <= cap; ++N) {
        r.history.push_back(toeplitz_det(f, N));
        if (r.history[r.history.size() - 1] == r.history[r.history.size() - 2]) {
            r.stabilized_at = N - 1;
            r.value = r.history.back();
            return r;
        }
    }
    throw stabilization_failure("Toeplitz determinants did not stabilize up to N = " + std::to_string(cap));
}

} // namespace crystal
