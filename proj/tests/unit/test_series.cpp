#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "crystal/error.hpp"
#include "crystal/laurent.hpp"
#include "crystal/products.hpp"
#include "crystal/series.hpp"

using namespace crystal;

namespace {

TruncatedSeries q1v(int D, int k = 1, long c = 1) {
    const std::vector<int> e{k};
    return TruncatedSeries::monomial(1, D, e, c);
}

TruncatedSeries from_coeffs(const std::vector<long>& c) {
    TruncatedSeries s(1, static_cast<int>(c.size()) - 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const std::vector<int> e{static_cast<int>(k)};
        s.add_term(e, c[k]);
    }
    return s;
}

TruncatedSeries random_series(std::mt19937_64& rng, int nv, int D, bool unit = false) {
    TruncatedSeries s(nv, D);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, D);
    std::vector<int> e(static_cast<std::size_t>(nv));
    for (int t = 0; t < 6; ++t) {
        int left = deg(rng);
        for (int v = 0; v < nv; ++v) {
            const int x = v + 1 == nv ? left : std::uniform_int_distribution<int>(0, left)(rng);
            e[static_cast<std::size_t>(v)] = x;
            left -= x;
        }
        s.add_term(e, coef(rng));
    }
    if (unit) {
        std::vector<int> zero(static_cast<std::size_t>(nv), 0);
        s.set_coefficient(zero, rng() % 2 ? 1 : -1);
    }
    return s;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("ring examples") {
    const auto one = TruncatedSeries::one(1, 3);
    CHECK((one + q1v(3)) * (one - q1v(3)) == one - q1v(3, 2));
    const auto a = from_coeffs({2, -1, 5, 7});
    CHECK(a * one == a);
    const auto x = TruncatedSeries::monomial(2, 4, std::vector<int>{1, 1});
    const auto sq = (TruncatedSeries::one(2, 4) + x).pow(2);
    CHECK(sq.terms().size() == 3);
    CHECK(sq.coefficient(std::vector<int>{1, 1}) == 2);
    CHECK(sq.coefficient(std::vector<int>{2, 2}) == 1);
}

TEST_CASE("terms are sorted and free of zeros") {
    auto s = TruncatedSeries::one(2, 3);
    s.add_term(std::vector<int>{0, 2}, 3);
    s.add_term(std::vector<int>{1, 0}, 5);
    s.add_term(std::vector<int>{1, 0}, -5);
    s.add_term(std::vector<int>{2, 1}, -1);
    const auto t = s.terms();
    REQUIRE(t.size() == 3);
    CHECK(t[0].exp == std::vector<int>{0, 0});
    CHECK(t[1].exp == std::vector<int>{0, 2});
    CHECK(t[2].exp == std::vector<int>{2, 1});
    CHECK(s.term_count() == 3);
}

TEST_CASE("dimension errors") {
    CHECK_THROWS_AS(TruncatedSeries::one(1, 3) + TruncatedSeries::one(1, 4), dimension_error);
    CHECK_THROWS_AS(TruncatedSeries::one(1, 3) * TruncatedSeries::one(2, 3), dimension_error);
    CHECK_THROWS_AS(TruncatedSeries::monomial(1, 3, std::vector<int>{-1}), dimension_error);
    CHECK(TruncatedSeries::monomial(1, 3, std::vector<int>{4}).is_zero());
}

TEST_CASE("invert examples") {
    CHECK(invert(TruncatedSeries::one(1, 3) - q1v(3)) == from_coeffs({1, 1, 1, 1}));
    CHECK(invert(TruncatedSeries::one(1, 3)) == TruncatedSeries::one(1, 3));
    const auto a = TruncatedSeries::one(2, 2) + TruncatedSeries::variable(2, 2, 0);
    auto expected = TruncatedSeries::one(2, 2);
    expected.add_term(std::vector<int>{1, 0}, -1);
    expected.add_term(std::vector<int>{2, 0}, 1);
    CHECK(invert(a) == expected);
    CHECK_THROWS_AS(invert(TruncatedSeries::constant(1, 3, 2)), not_invertible_error);
    CHECK_THROWS_AS(invert(q1v(3)), not_invertible_error);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int nv = 1 + trial % 3, D = 2 + trial % 5;
        const auto a = random_series(rng, nv, D), b = random_series(rng, nv, D), c = random_series(rng, nv, D);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(oracle::to_poly(a * b) == oracle::mul(oracle::to_poly(a), oracle::to_poly(b), D));
        const auto u = random_series(rng, nv, D, true);
        const auto ui = invert(u);
        CHECK((u * ui).is_one());
        CHECK((ui * u).is_one());
        auto acc = a;
        acc.add_product(b, c);
        CHECK(acc == a + b * c);
        acc.sub_product(b, c);
        CHECK(acc == a);
    }
}

TEST_CASE("truncation is a ring map") {
    std::mt19937_64 rng(11);
    const auto a = random_series(rng, 2, 6), b = random_series(rng, 2, 6);
    CHECK((a * b).truncated(3) == a.truncated(3) * b.truncated(3));
}

TEST_CASE("one_plus_power") {
    const int D = 6;
    const auto x = q1v(D, 1, -1);
    CHECK(one_plus_power(x, -1) == from_coeffs({1, 1, 1, 1, 1, 1, 1}));
    CHECK(one_plus_power(x, 3) == from_coeffs({1, -3, 3, -1, 0, 0, 0}));
    CHECK(one_plus_power(q1v(D), -2) * (TruncatedSeries::one(1, D) + q1v(D)).pow(2) == TruncatedSeries::one(1, D));
    CHECK_THROWS_AS(one_plus_power(TruncatedSeries::one(1, D), 2), invalid_argument);
}

TEST_CASE("product_over_k") {
    const int D = 5;
    const auto counts = oracle::plane_partition_counts(D);
    const auto m = product_over_k([D](int k) { return one_plus_power(q1v(D, k, -1), -k); }, 1, D);
    for (int k = 0; k <= D; ++k) CHECK(m.coefficient(std::vector<int>{k}) == counts[static_cast<std::size_t>(k)]);
    CHECK(m == from_coeffs({1, 1, 3, 6, 13, 24}));

    CHECK(product_over_k([](int) { return TruncatedSeries::one(1, 4); }, 1, 4).is_one());

    // distinct-part partitions, counted by brute force
    const auto dp = product_over_k([](int k) { return TruncatedSeries::one(1, 3) + q1v(3, k); }, 1, 3);
    for (int n = 0; n <= 3; ++n) {
        long distinct = 0;
        for (const auto& p : oracle::all_partitions_naive(n)) {
            int s = 0;
            for (int x : p) s += x;
            if (s == n && std::adjacent_find(p.begin(), p.end()) == p.end()) ++distinct;
        }
        CHECK(dp.coefficient(std::vector<int>{n}) == distinct);
    }

    CHECK_THROWS_AS(product_over_k([](int) { return TruncatedSeries::one(1, 3) + q1v(3); }, 1, 3, 50),
                    non_termination_error);
}

TEST_CASE("substitution and collapse") {
    const auto m = macmahon(4);
    const auto two = to_conifold_variables(m, 8);
    CHECK(two.coefficient(std::vector<int>{2, 2}) == 3);
    CHECK(two.coefficient(std::vector<int>{2, 1}) == 0);
    CHECK(collapse_variables(two) == substitute_monomials(m, std::vector<exponent_vector>{{2}}, 1, 8));
    CHECK_NOTHROW(substitute_monomials(m, std::vector<exponent_vector>{{2}}, 1, 9));
    CHECK_THROWS_AS(substitute_monomials(m, std::vector<exponent_vector>{{2}}, 1, 10), dimension_error);
    CHECK_THROWS_AS(substitute_monomials(m, std::vector<exponent_vector>{{0}}, 1, 2), dimension_error);
}

TEST_CASE("first_difference") {
    auto a = from_coeffs({1, 2, 3});
    auto b = a;
    CHECK_FALSE(first_difference(a, b));
    b.add_term(std::vector<int>{2}, 1);
    CHECK(*first_difference(a, b) == std::vector<int>{2});
}

TEST_CASE("to_string") {
    CHECK(from_coeffs({1, -1, 3}).to_string() == "1 - q + 3*q^2");
    CHECK(TruncatedSeries(2, 2).to_string() == "0");
}

}

TEST_SUITE("laurent") {

TEST_CASE("symbol coefficients and window") {
    const int D = 2;
    auto f = LaurentSymbol::one(1, D, 3);
    CHECK(symbol_coefficient(f, 0).is_one());
    CHECK(symbol_coefficient(f, 2).is_zero());
    CHECK(symbol_coefficient(f, 9).is_zero());
}

TEST_CASE("product overflow is reported") {
    const int D = 3;
    const auto one = TruncatedSeries::one(1, D);
    const auto z = LaurentSymbol::binomial(one, one, 1, 1);  // 1 + z
    CHECK_THROWS_AS(z * z, window_overflow);
}

TEST_CASE("inverse of a symbol") {
    const int D = 4;
    const auto one = TruncatedSeries::one(1, D);
    const std::vector<int> e1{1};
    const auto q = TruncatedSeries::monomial(1, D, e1);
    // (1 + q z)(1 + q z^{-1})
    auto f = LaurentSymbol::binomial(one, q, 1, D + 1) * LaurentSymbol::binomial(one, q, -1, D + 1);
    const auto g = f.inverse();
    CHECK(f * g == LaurentSymbol::one(1, D, D + 1));
    CHECK(g.reflected() == g);
}

TEST_CASE("toeplitz examples") {
    const int D = 3;
    const auto f = LaurentSymbol::one(1, D, D + 1);
    CHECK(toeplitz_det(f, 5).is_one());
    const auto one = TruncatedSeries::one(1, D);
    const auto g = LaurentSymbol::binomial(one + one, one, 1, 2);
    CHECK(toeplitz_det(g, 1) == symbol_coefficient(g, 0));
    CHECK_THROWS_AS(toeplitz_det(g, 0), invalid_argument);
}

}
