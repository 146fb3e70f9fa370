#include <doctest.h>

#include <map>

#include "crystal/error.hpp"
#include "crystal/spectral.hpp"

using namespace crystal;

namespace {

CurveParams params(const char* Q, const char* mu, const char* eps2) {
    return {rational(Q), rational(mu), rational(eps2)};
}

} // namespace

TEST_SUITE("spectral") {

TEST_CASE("mirror map by hand") {
    const auto c = mirror_map(params("2/3", "1/5", "1/7"));
    CHECK(c.Q1 == rational("119/828"));
    CHECK(c.Q2 == rational("115/612"));
    CHECK(c.Q3 == rational("216/391"));
}

TEST_CASE("structure table") {
    std::map<MirrorFactor, int> in_denominator, in_numerator;
    std::map<MirrorParam, int> prefactors;
    for (const auto& t : mirror_map_structure()) {
        ++in_numerator[t.numerator];
        ++prefactors[t.prefactor];
        CHECK(t.denominator[0] != t.denominator[1]);
        CHECK(t.numerator != t.denominator[0]);
        CHECK(t.numerator != t.denominator[1]);
        for (auto f : t.denominator) ++in_denominator[f];
    }
    for (auto f : {MirrorFactor::mu_eps2, MirrorFactor::q_eps2, MirrorFactor::mu_q}) {
        CHECK(in_denominator[f] == 2);
        CHECK(in_numerator[f] == 1);
    }
    CHECK(prefactors.size() == 3);
}

TEST_CASE("special parameter values") {
    const auto equal = mirror_map(params("3/4", "3/4", "2/9"));
    CHECK(equal.Q2 == equal.Q3);
    CHECK(mirror_map(params("3/4", "1/2", "0")).Q1 == 0);
    CHECK(mirror_map(params("3/4", "0", "1/2")).Q2 == 0);
    CHECK_THROWS_AS(mirror_map(params("-1", "1", "1/2")), singular_parameters);
}

TEST_CASE("s3 equivariance") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto p = random_params(seed);
        CAPTURE(to_string(p));
        CHECK(p.Q > 0);
        CHECK(s3_equivariance_check(p).ok);
    }
}

TEST_CASE("s3 check detects a wrong map") {
    // swapping μ and Q must exchange Q2 and Q3; for μ ≠ Q they differ
    const auto p = params("1/2", "1/3", "1/5");
    const auto c = mirror_map(p);
    CHECK_FALSE(c.Q2 == c.Q3);
    const auto swapped = mirror_map(params("1/3", "1/2", "1/5"));
    CHECK(swapped.Q2 == c.Q3);
    CHECK(swapped.Q1 == c.Q1);
}

TEST_CASE("spp limit") {
    const auto r = spp_limit_check(params("1/2", "1/3", "1/11"));
    CHECK(r.ok);
    CHECK(r.A == rational("6/7"));
    CHECK(r.B == 1);
    CHECK(r.scale == rational("7/6"));
    CHECK(r.limit[3] == 0);
    for (std::uint64_t seed = 100; seed < 120; ++seed) CHECK(spp_limit_check(random_params(seed)).ok);
}

TEST_CASE("spp limit degenerates at mu = 0") {
    const auto r = spp_limit_check(params("1/2", "0", "1/3"));
    CHECK(r.ok);
    CHECK(r.spp[4] == 0);
}

TEST_CASE("spp product identity") {
    CHECK(spp_identity_squared(1, 5));
    CHECK(spp_identity_squared(2, 5));
    CHECK_THROWS_AS(spp_identity_squared(0, 4), unsupported_chamber);
}

TEST_CASE("random parameters") {
    const auto a = random_params(5), b = random_params(5);
    CHECK(a.Q == b.Q);
    CHECK(a.mu == b.mu);
    CHECK(a.eps2 == b.eps2);
}

}
