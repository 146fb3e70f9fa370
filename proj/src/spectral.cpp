#include "crystal/spectral.hpp"

#include <random>

#include "crystal/enumerate.hpp"
#include "crystal/error.hpp"
#include "crystal/matrix_model.hpp"
#include "crystal/products.hpp"

namespace crystal {

const std::array<MirrorTerm, 3>& mirror_map_structure() {
    static const std::array<MirrorTerm, 3> table{{
        {MirrorParam::eps2, MirrorFactor::mu_q, {MirrorFactor::mu_eps2, MirrorFactor::q_eps2}},
        {MirrorParam::mu, MirrorFactor::q_eps2, {MirrorFactor::mu_q, MirrorFactor::mu_eps2}},
        {MirrorParam::Q, MirrorFactor::mu_eps2, {MirrorFactor::q_eps2, MirrorFactor::mu_q}},
    }};
    return table;
}

namespace {

rational factor_value(MirrorFactor f, const CurveParams& p) {
    switch (f) {
    case MirrorFactor::mu_eps2: return 1 + p.mu * p.eps2;
    case MirrorFactor::q_eps2: return 1 + p.Q * p.eps2;
    case MirrorFactor::mu_q: return 1 + p.mu * p.Q;
    }
    return 0;
}

rational param_value(MirrorParam x, const CurveParams& p) {
    switch (x) {
    case MirrorParam::Q: return p.Q;
    case MirrorParam::mu: return p.mu;
    case MirrorParam::eps2: return p.eps2;
    }
    return 0;
}

} // namespace

CurveCoefficients mirror_map(const CurveParams& p) {
    std::array<rational, 3> out;
    const auto& table = mirror_map_structure();
    for (std::size_t i = 0; i < 3; ++i) {
        const rational den = factor_value(table[i].denominator[0], p) * factor_value(table[i].denominator[1], p);
        if (sgn(den) == 0) throw singular_parameters("mirror map denominator vanishes at " + to_string(p));
        out[i] = param_value(table[i].prefactor, p) * factor_value(table[i].numerator, p) / den;
    }
    return {out[0], out[1], out[2]};
}

S3Report s3_equivariance_check(const CurveParams& p) {
    const CurveCoefficients base = mirror_map(p);
    struct Case {
        const char* name;
        CurveParams swapped;
        CurveCoefficients expected;
    };
    const Case cases[] = {
        {"mu<->Q", {p.mu, p.Q, p.eps2}, {base.Q1, base.Q3, base.Q2}},
        {"eps2<->mu", {p.Q, p.eps2, p.mu}, {base.Q2, base.Q1, base.Q3}},
        {"eps2<->Q", {p.eps2, p.mu, p.Q}, {base.Q3, base.Q2, base.Q1}},
    };
    for (const auto& c : cases)
        if (!(mirror_map(c.swapped) == c.expected)) return {false, c.name};
    return {true, ""};
}

SppLimitReport spp_limit_check(const CurveParams& p) {
    SppLimitReport r{false, 0, 0, 0, {}, {}, ""};
    CurveParams limit_params = p;
    limit_params.eps2 = 0;
    const CurveCoefficients c = mirror_map(limit_params);
    r.limit = {rational(1), rational(1), rational(1), c.Q1, c.Q2, c.Q3};
    r.spp = {rational(1), rational(1), 1 + p.Q * p.mu, rational(0), p.mu, p.Q};

    // Under e^x ↦ A e^x, e^y ↦ B e^y and an overall factor s the limit
    // coefficients become s·(AB, A, B, A², B², 1)·limit. Solve from the
    // e^{x+y}, e^x, e^y entries and verify the rest.
    const auto& L = r.limit;
    const auto& S = r.spp;
    if (sgn(L[0]) == 0 || sgn(L[1]) == 0 || sgn(L[2]) == 0 || sgn(S[0]) == 0 || sgn(S[1]) == 0 || sgn(S[2]) == 0) {
        r.message = "degenerate linear coefficients";
        return r;
    }
    // s·A·B·L0 = S0, s·A·L1 = S1, s·B·L2 = S2
    r.B = (S[0] * L[1]) / (S[1] * L[0]);
    r.A = (S[0] * L[2]) / (S[2] * L[0]);
    r.scale = S[1] / (r.A * L[1]);
    const std::array<rational, 6> monomial{r.A * r.B, r.A, r.B, r.A * r.A, r.B * r.B, rational(1)};
    for (std::size_t i = 0; i < 6; ++i) {
        if (r.scale * monomial[i] * L[i] != S[i]) {
            static const char* names[] = {"e^{x+y}", "e^x", "e^y", "e^{2x}", "e^{2y}", "1"};
            r.message = std::string("coefficient of ") + names[i] + " does not match";
            return r;
        }
    }
    r.ok = sgn(r.A) != 0 && sgn(r.B) != 0;
    if (!r.ok) r.message = "degenerate scale factor";
    return r;
}

bool spp_identity_squared(int n, int D) {
    if (n < 1) throw unsupported_chamber("spp_identity_squared requires n >= 1");
    const TruncatedSeries z_matrix = enumerate_z(conifold_theta(n), D) * invert(prefactor_cn(n, D));
    const TruncatedSeries lhs = z_matrix * z_matrix;
    const TruncatedSeries rhs = spp_top_squared(n, D) * inverse_macmahon_conifold(D);
    return lhs == rhs;
}

CurveParams random_params(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 40), den(1, 40);
    auto draw = [&]() {
        rational r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };
    CurveParams p;
    p.Q = draw();
    p.mu = draw();
    p.eps2 = draw();
    return p;
}

std::string to_string(const CurveParams& p) {
    return "(Q=" + p.Q.get_str() + ", mu=" + p.mu.get_str() + ", eps2=" + p.eps2.get_str() + ")";
}

} // namespace crystal
