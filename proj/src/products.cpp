#include "crystal/products.hpp"

#include <vector>

#include "crystal/error.hpp"

namespace crystal {

namespace {

// c · q0^a q1^b in the conifold ring.
TruncatedSeries mono2(int a, int b, int D, long c = 1) {
    const std::vector<int> e{a, b};
    return TruncatedSeries::monomial(2, D, e, c);
}

void check_degree(int D) {
    if (D < 0) throw invalid_argument("degree must be non-negative");
}

void check_chamber(int n) {
    if (n < 0) throw invalid_argument("chamber index must be non-negative");
}

} // namespace

TruncatedSeries macmahon(int D) {
    check_degree(D);
    return product_over_k(
        [D](int k) {
            const std::vector<int> e{k};
            return one_plus_power(TruncatedSeries::monomial(1, D, e, -1), -k);
        },
        1, D);
}

TruncatedSeries conifold_wall_factor(int k, int D) {
    check_degree(D);
    if (k < 1) throw invalid_argument("wall factor index must be at least 1");
    return one_plus_power(mono2(k, k - 1, D), k);
}

TruncatedSeries conifold_product(int n, int D) {
    check_degree(D);
    check_chamber(n);
    return product_over_k(
        [n, D](int k) {
            TruncatedSeries f = one_plus_power(mono2(k, k, D, -1), -2 * k);
            f *= one_plus_power(mono2(k, k + 1, D), k);
            if (k > n) f *= one_plus_power(mono2(k, k - 1, D), k);
            return f;
        },
        2, D);
}

TruncatedSeries spp_top_squared(int n, int D) {
    check_degree(D);
    check_chamber(n);
    if (n == 0) throw unsupported_chamber("spp_top_squared: n = 0 gives mu = 1/Q with a negative exponent");
    return product_over_k(
        [n, D](int k) {
            TruncatedSeries f = one_plus_power(mono2(k, k + 1, D), 2 * k);        // (1 − Q q^k)^{2k}
            f *= one_plus_power(mono2(n + k, n + k - 1, D), 2 * k);                // (1 − μ q^k)^{2k}
            f *= one_plus_power(mono2(k, k, D, -1), -3 * k);                       // (1 − q^k)^{−3k}
            f *= one_plus_power(mono2(n + k, n + k, D, -1), -2 * k);               // (1 − μQ q^k)^{−2k}
            return f;
        },
        2, D);
}

TruncatedSeries inverse_macmahon_conifold(int D) {
    check_degree(D);
    return product_over_k([D](int k) { return one_plus_power(mono2(k, k, D, -1), k); }, 2, D);
}

TruncatedSeries to_conifold_variables(const TruncatedSeries& one_var, int D) {
    if (one_var.num_vars() != 1) throw dimension_error("expected a one-variable series");
    const std::vector<exponent_vector> images{{1, 1}};
    return substitute_monomials(one_var, images, 2, D);
}

TruncatedSeries collapse_variables(const TruncatedSeries& s) {
    std::vector<exponent_vector> images(static_cast<std::size_t>(s.num_vars()), exponent_vector{1});
    return substitute_monomials(s, images, 1, s.cutoff());
}

} // namespace crystal
