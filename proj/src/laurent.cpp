#include "crystal/laurent.hpp"

#include <algorithm>
#include <cstdlib>

#include "crystal/determinant.hpp"
#include "crystal/error.hpp"

namespace crystal {

LaurentSymbol::LaurentSymbol(int num_vars, int cutoff, int window)
    : num_vars_(num_vars), cutoff_(cutoff), window_(window) {
    if (window < 0) throw dimension_error("symbol window must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(2 * window + 1), TruncatedSeries(num_vars, cutoff));
}

LaurentSymbol LaurentSymbol::one(int num_vars, int cutoff, int window) {
    LaurentSymbol f(num_vars, cutoff, window);
    f.at(0) = TruncatedSeries::one(num_vars, cutoff);
    return f;
}

LaurentSymbol LaurentSymbol::binomial(const TruncatedSeries& c, const TruncatedSeries& d, int shift,
                                      int window) {
    if (c.num_vars() != d.num_vars() || c.cutoff() != d.cutoff())
        throw dimension_error("binomial symbol: mismatched coefficients");
    LaurentSymbol f(c.num_vars(), c.cutoff(), window);
    f.at(0) = c;
    if (std::abs(shift) > window) {
        if (!d.is_zero()) throw window_overflow("binomial symbol: z-power outside the window");
        return f;
    }
    f.at(shift) += d;
    return f;
}

TruncatedSeries LaurentSymbol::coefficient(int n) const {
    if (std::abs(n) > window_) return TruncatedSeries(num_vars_, cutoff_);
    return coeffs_[static_cast<std::size_t>(n + window_)];
}

const TruncatedSeries& LaurentSymbol::at(int n) const {
    if (std::abs(n) > window_) throw dimension_error("symbol index outside the window");
    return coeffs_[static_cast<std::size_t>(n + window_)];
}

TruncatedSeries& LaurentSymbol::at(int n) {
    if (std::abs(n) > window_) throw dimension_error("symbol index outside the window");
    return coeffs_[static_cast<std::size_t>(n + window_)];
}

LaurentSymbol LaurentSymbol::operator*(const LaurentSymbol& other) const {
    if (num_vars_ != other.num_vars_ || cutoff_ != other.cutoff_ || window_ != other.window_)
        throw dimension_error("symbol product: mismatched shapes");
    const int W = window_;
    LaurentSymbol out(num_vars_, cutoff_, W);
    for (int n = -2 * W; n <= 2 * W; ++n) {
        TruncatedSeries total(num_vars_, cutoff_);
        for (int a = std::max(-W, n - W); a <= std::min(W, n + W); ++a) {
            const TruncatedSeries& x = at(a);
            const TruncatedSeries& y = other.at(n - a);
            if (x.is_zero() || y.is_zero()) continue;
            total.add_product(x, y);
        }
        if (std::abs(n) <= W)
            out.at(n) = std::move(total);
        else if (!total.is_zero())
            throw window_overflow("symbol product has a non-zero z^" + std::to_string(n) +
                                  " coefficient outside window " + std::to_string(W));
    }
    return out;
}

LaurentSymbol LaurentSymbol::inverse() const {
    const TruncatedSeries u = invert(at(0));
    // h = u·f − 1 has no constant term anywhere, so (1 + h)⁻¹ = Σ (−h)^j
    // terminates after `cutoff` steps.
    LaurentSymbol h(num_vars_, cutoff_, window_);
    for (int n = -window_; n <= window_; ++n) h.at(n) = at(n) * u;
    h.at(0) -= TruncatedSeries::one(num_vars_, cutoff_);
    for (int n = -window_; n <= window_; ++n)
        if (h.at(n).constant_term() != 0)
            throw not_invertible_error(
                "symbol inverse: a non-zero z-power carries a degree-0 coefficient");
    LaurentSymbol neg_h = h;
    for (int n = -window_; n <= window_; ++n) neg_h.at(n) = -h.at(n);

    LaurentSymbol sum = one(num_vars_, cutoff_, window_);
    LaurentSymbol power = sum;
    for (int j = 1; j <= cutoff_; ++j) {
        power = power * neg_h;
        bool zero = true;
        for (int n = -window_; n <= window_ && zero; ++n) zero = power.at(n).is_zero();
        if (zero) break;
        for (int n = -window_; n <= window_; ++n) sum.at(n) += power.at(n);
    }
    for (int n = -window_; n <= window_; ++n) sum.at(n) = sum.at(n) * u;
    return sum;
}

LaurentSymbol LaurentSymbol::reflected() const {
    LaurentSymbol out(num_vars_, cutoff_, window_);
    for (int n = -window_; n <= window_; ++n) out.at(-n) = at(n);
    return out;
}

int LaurentSymbol::support_radius() const {
    for (int r = window_; r > 0; --r)
        if (!at(r).is_zero() || !at(-r).is_zero()) return r;
    return 0;
}

bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
    if (a.num_vars_ != b.num_vars_ || a.cutoff_ != b.cutoff_) return false;
    const int W = std::max(a.window_, b.window_);
    for (int n = -W; n <= W; ++n)
        if (!(a.coefficient(n) == b.coefficient(n))) return false;
    return true;
}

TruncatedSeries symbol_coefficient(const LaurentSymbol& f, int n) { return f.coefficient(n); }

std::vector<std::vector<TruncatedSeries>> toeplitz_matrix(const LaurentSymbol& f, int N) {
    if (N < 1) throw invalid_argument("Toeplitz size must be at least 1");
    std::vector<std::vector<TruncatedSeries>> m(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[static_cast<std::size_t>(i)].push_back(f.coefficient(i - j));
    return m;
}

TruncatedSeries toeplitz_det(const LaurentSymbol& f, int N) {
    return determinant(toeplitz_matrix(f, N));
}

} // namespace crystal
