#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace crystal {

using bigint = mpz_class;
using exponent_vector = std::vector<int>;

/// The monomials q^e with e ≥ 0 and |e| ≤ cutoff in a fixed number of
/// variables, indexed in graded order (total degree, then lexicographic).
/// Instances are interned per (num_vars, cutoff) and shared between series.
class MonomialBasis {
public:
    static std::shared_ptr<const MonomialBasis> get(int num_vars, int cutoff);

    int num_vars() const noexcept { return num_vars_; }
    int cutoff() const noexcept { return cutoff_; }
    std::size_t size() const noexcept { return degree_.size(); }

    std::span<const int> exponents(std::size_t index) const noexcept {
        return {exps_.data() + index * static_cast<std::size_t>(num_vars_),
                static_cast<std::size_t>(num_vars_)};
    }
    int degree(std::size_t index) const noexcept { return degree_[index]; }

    /// First index of total degree d (d in [0, cutoff + 1]).
    std::size_t degree_begin(int d) const noexcept { return degree_begin_[d]; }

    /// -1 if the exponent is negative or beyond the cutoff.
    std::ptrdiff_t index_of(std::span<const int> exps) const;

    /// Index of the product monomial, -1 when the degree exceeds the cutoff.
    std::ptrdiff_t product_index(std::size_t i, std::size_t j) const;

private:
    MonomialBasis(int num_vars, int cutoff);
    std::uint64_t pack(std::span<const int> exps) const noexcept;

    int num_vars_;
    int cutoff_;
    std::vector<int> exps_;
    std::vector<int> degree_;
    std::vector<std::size_t> degree_begin_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::int32_t> product_table_;  // empty when the basis is large
    std::vector<std::pair<std::uint64_t, std::int32_t>> sorted_keys_;
};

struct SeriesTerm {
    exponent_vector exp;
    bigint coef;
};

/// Multivariate power series in q_0..q_{L-1} with integer coefficients,
/// truncated at total degree `cutoff`.
class TruncatedSeries {
public:
    TruncatedSeries(int num_vars, int cutoff);

    static TruncatedSeries zero(int num_vars, int cutoff) { return {num_vars, cutoff}; }
    static TruncatedSeries one(int num_vars, int cutoff);
    static TruncatedSeries constant(int num_vars, int cutoff, const bigint& c);
    /// coef · q^exps; silently zero when the degree is beyond the cutoff.
    /// Negative exponents are a dimension_error.
    static TruncatedSeries monomial(int num_vars, int cutoff, std::span<const int> exps,
                                    const bigint& coef = 1);
    static TruncatedSeries variable(int num_vars, int cutoff, int var);

    int num_vars() const noexcept { return basis_->num_vars(); }
    int cutoff() const noexcept { return basis_->cutoff(); }
    const MonomialBasis& basis() const noexcept { return *basis_; }

    bigint coefficient(std::span<const int> exps) const;
    const bigint& coefficient_at(std::size_t index) const noexcept { return coeffs_[index]; }
    bigint constant_term() const { return coeffs_[0]; }

    void add_term(std::span<const int> exps, const bigint& coef);
    void set_coefficient(std::span<const int> exps, const bigint& coef);

    /// Non-zero terms sorted lexicographically by exponent vector.
    std::vector<SeriesTerm> terms() const;
    std::size_t term_count() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    /// Lowest total degree carrying a non-zero coefficient.
    std::optional<int> min_degree() const;
    /// Lowest degree of this − constant_term.
    std::optional<int> min_nonconstant_degree() const;

    /// Drop all monomials of total degree > new_cutoff (new_cutoff ≤ cutoff).
    TruncatedSeries truncated(int new_cutoff) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const bigint& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const bigint& s) { return a *= s; }
    TruncatedSeries operator-() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// a += b * c without a temporary.
    void add_product(const TruncatedSeries& b, const TruncatedSeries& c);
    void sub_product(const TruncatedSeries& b, const TruncatedSeries& c);

    TruncatedSeries pow(unsigned exponent) const;

    /// Human-readable form, e.g. "1 + q0 + 3*q0^2".
    std::string to_string(std::span<const std::string> var_names = {}) const;

private:
    void check_compatible(const TruncatedSeries& other, const char* op) const;

    std::shared_ptr<const MonomialBasis> basis_;
    std::vector<bigint> coeffs_;
};

/// Multiplicative inverse up to the cutoff, computed degree by degree.
/// Throws not_invertible_error unless the constant term is ±1.
TruncatedSeries invert(const TruncatedSeries& a);

/// (1 + x)^a for a series x without constant term and any integer a,
/// via the generalized binomial series.
TruncatedSeries one_plus_power(const TruncatedSeries& x, long a);

/// ∏_{k≥1} factor(k), truncated. Factors are requested until one is ≡ 1
/// modulo the cutoff (the lowest non-constant degree of factor(k) is assumed
/// non-decreasing in k). Throws non_termination_error after k_limit factors.
TruncatedSeries product_over_k(const std::function<TruncatedSeries(int)>& factor, int num_vars,
                               int cutoff, int k_limit = 4096);

/// Substitute q_i ↦ images[i] (monomials in the target variables, each of
/// total degree ≥ 1). The target cutoff may not exceed (cutoff + 1)·d − 1,
/// d the least image degree.
TruncatedSeries substitute_monomials(const TruncatedSeries& source,
                                     std::span<const exponent_vector> images, int target_vars,
                                     int target_cutoff);

/// First exponent vector (lexicographic) where the two series differ.
std::optional<exponent_vector> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

std::vector<std::string> default_variable_names(int num_vars);

} // namespace crystal
