#include <doctest.h>

#include <cstdlib>

#include "../oracles.hpp"
#include "crystal/enumerate.hpp"
#include "crystal/error.hpp"
#include "crystal/products.hpp"

using namespace crystal;

namespace {

std::vector<ChamberSpec> supported_specs() {
    return {c3_spec(),
            conifold_theta(0),
            conifold_theta(1),
            conifold_theta(2),
            ChamberSpec::make(2, {1, 1}, {1, 3}),
            ChamberSpec::make(3, {1, -1, 1}, {1, 3, 5}),
            ChamberSpec::make(3, {1, -1, -1}, {3, 1, 5}),
            ChamberSpec::make(2, {-1, -1}, {-1, 5})};
}

oracle::poly naive(const ChamberSpec& spec, int D, bool transposed = false, int max_rows = -1) {
    const auto w = slice_window(spec, D);
    const int T = std::max(std::abs(w.first), std::abs(w.last)) + 2;
    return oracle::configurations_naive(spec, D, w.budget, T, transposed, max_rows);
}

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("c3 agrees with plane partition counts") {
    const int D = 8;
    const auto z = enumerate_z(c3_spec(), D);
    const auto counts = oracle::plane_partition_counts(D);
    for (int k = 0; k <= D; ++k) CHECK(z.coefficient(std::vector<int>{k}) == counts[static_cast<std::size_t>(k)]);
}

TEST_CASE("agrees with the brute-force slice oracle") {
    for (const auto& spec : supported_specs()) {
        CAPTURE(spec.to_string());
        const int D = spec.L() == 3 ? 3 : 4;
        CHECK(oracle::to_poly(enumerate_z(spec, D)) == naive(spec, D));
    }
}

TEST_CASE("transposed and row-limited variants agree with the oracle") {
    for (const auto& spec : supported_specs()) {
        CAPTURE(spec.to_string());
        const int D = spec.L() == 3 ? 3 : 4;
        EnumerateOptions t;
        t.transposed = true;
        CHECK(oracle::to_poly(enumerate_z(spec, D, t)) == naive(spec, D, true));
        EnumerateOptions r;
        r.max_rows = 1;
        CHECK(oracle::to_poly(enumerate_z(spec, D, r)) == naive(spec, D, false, 1));
    }
}

TEST_CASE("widening the window changes nothing") {
    for (const auto& spec : supported_specs()) {
        CAPTURE(spec.to_string());
        EnumerateOptions wide;
        wide.extra_margin = 3;
        wide.box_budget = slice_window(spec, 5).budget + 2;
        CHECK(enumerate_z(spec, 5, wide) == enumerate_z(spec, 5));
    }
}

TEST_CASE("degree zero is one") {
    for (const auto& spec : supported_specs()) CHECK(enumerate_z(spec, 0).is_one());
}

TEST_CASE("lower cutoffs are truncations") {
    for (const auto& spec : supported_specs()) {
        const auto hi = enumerate_z(spec, 6);
        for (int d = 0; d < 6; ++d) CHECK(hi.truncated(d) == enumerate_z(spec, d));
    }
}

TEST_CASE("coefficients are non-negative and match the visitor") {
    for (const auto& spec : supported_specs()) {
        CAPTURE(spec.to_string());
        const int D = 4;
        const auto z = enumerate_z(spec, D);
        mpz_class total = 0;
        for (const auto& t : z.terms()) {
            CHECK(t.coef > 0);
            total += t.coef;
        }
        TruncatedSeries rebuilt(spec.L(), D);
        long visited = 0;
        for_each_configuration(spec, D, {}, [&](const Configuration& c) {
            ++visited;
            CHECK(satisfies_rules(spec, c));
            rebuilt.add_term(configuration_weight(spec, c), 1);
        });
        CHECK(total == visited);
        CHECK(rebuilt == z);
    }
}

TEST_CASE("transpose symmetry") {
    for (const auto& spec : supported_specs()) CHECK(enumerate_z(spec, 5) == enumerate_z_transposed(spec, 5));
}

TEST_CASE("single box configurations") {
    // one box sits at a peak slice; its weight is the peak's residue weight
    const auto z0 = enumerate_z(conifold_theta(0), 1);
    CHECK(z0.coefficient(std::vector<int>{1, 0}) == 1);
    CHECK(z0.coefficient(std::vector<int>{0, 1}) == 0);
    CHECK(enumerate_z(conifold_theta(0), 2).coefficient(std::vector<int>{1, 1}) == 2);
}

TEST_CASE("conifold chambers match the product formula") {
    for (int n = 0; n <= 3; ++n) CHECK(enumerate_z(conifold_theta(n), 6) == conifold_product(n, 6));
}

TEST_CASE("satisfies_rules rejects a broken configuration") {
    Configuration c{0, {Partition({2}), Partition({2, 2})}};
    CHECK_FALSE(satisfies_rules(c3_spec(), c));
    Configuration ok{-1, {Partition({1}), Partition({2, 1}), Partition({1})}};
    CHECK(satisfies_rules(c3_spec(), ok));
    CHECK(ok.total_boxes() == 5);
    CHECK(ok.boxes_per_residue(1) == std::vector<int>{5});
    CHECK(ok.boxes_per_residue(2) == std::vector<int>{3, 2});
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(enumerate_z(c3_spec(), -1), invalid_argument);
}

}
