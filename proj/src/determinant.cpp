#include "crystal/determinant.hpp"

#include <utility>

#include "crystal/error.hpp"

namespace crystal {

namespace {

void check_square(const SeriesMatrix& m) {
    if (m.empty()) throw dimension_error("determinant of an empty matrix");
    const int nv = m[0][0].num_vars();
    const int d = m[0][0].cutoff();
    for (const auto& row : m) {
        if (row.size() != m.size()) throw dimension_error("determinant: matrix is not square");
        for (const auto& x : row)
            if (x.num_vars() != nv || x.cutoff() != d)
                throw dimension_error("determinant: entries have mismatched shape");
    }
}

// Eliminates in place. Returns the index of the first column without a unit
// pivot (n if elimination completed) and multiplies `scale` by the product of
// the pivots and the permutation sign.
std::size_t eliminate(SeriesMatrix& a, TruncatedSeries& scale) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a[p][c].is_unit()) ++p;
        if (p == n) return c;
        if (p != c) {
            std::swap(a[p], a[c]);
            scale = -scale;
        }
        const TruncatedSeries inv = invert(a[c][c]);
        scale *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const TruncatedSeries factor = a[r][c] * inv;
            for (std::size_t j = c + 1; j < n; ++j) a[r][j].sub_product(factor, a[c][j]);
        }
    }
    return n;
}

} // namespace

TruncatedSeries berkowitz_determinant(const SeriesMatrix& m) {
    check_square(m);
    const std::size_t n = m.size();
    const int nv = m[0][0].num_vars();
    const int D = m[0][0].cutoff();
    const TruncatedSeries zero(nv, D);

    // v holds the coefficients of the characteristic polynomial of the
    // leading r×r block, highest power first.
    std::vector<TruncatedSeries> v{TruncatedSeries::one(nv, D), -m[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        // t = (1, −a_rr, −R S, −R M S, …, −R M^{r−1} S)
        std::vector<TruncatedSeries> t;
        t.reserve(r + 2);
        t.push_back(TruncatedSeries::one(nv, D));
        t.push_back(-m[r][r]);
        std::vector<TruncatedSeries> col(r, zero);
        for (std::size_t i = 0; i < r; ++i) col[i] = m[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            TruncatedSeries dot = zero;
            for (std::size_t j = 0; j < r; ++j) dot.sub_product(m[r][j], col[j]);
            t.push_back(std::move(dot));
            if (k + 1 == r) break;
            std::vector<TruncatedSeries> next(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i].add_product(m[i][j], col[j]);
            col = std::move(next);
        }
        std::vector<TruncatedSeries> w(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i].add_product(t[i - j], v[j]);
        v = std::move(w);
    }
    return n % 2 == 0 ? v[n] : -v[n];
}

std::optional<TruncatedSeries> unit_pivot_determinant(const SeriesMatrix& m) {
    check_square(m);
    SeriesMatrix a = m;
    TruncatedSeries scale = TruncatedSeries::one(m[0][0].num_vars(), m[0][0].cutoff());
    if (eliminate(a, scale) != a.size()) return std::nullopt;
    return scale;
}

TruncatedSeries determinant(const SeriesMatrix& m) {
    check_square(m);
    SeriesMatrix a = m;
    TruncatedSeries scale = TruncatedSeries::one(m[0][0].num_vars(), m[0][0].cutoff());
    const std::size_t stuck = eliminate(a, scale);
    if (stuck == a.size()) return scale;
    // det = scale · det(Schur complement on the remaining block)
    SeriesMatrix rest;
    for (std::size_t i = stuck; i < a.size(); ++i)
        rest.emplace_back(a[i].begin() + static_cast<std::ptrdiff_t>(stuck), a[i].end());
    return scale * berkowitz_determinant(rest);
}

} // namespace crystal
