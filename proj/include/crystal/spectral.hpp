#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace crystal {

using rational = mpq_class;

struct CurveParams {
    rational Q;
    rational mu;
    rational eps2;
};

struct CurveCoefficients {
    rational Q1;
    rational Q2;
    rational Q3;
    friend bool operator==(const CurveCoefficients&, const CurveCoefficients&) = default;
};

/// The factors (1 + μ ε²), (1 + Q ε²), (1 + μ Q) and where they enter the
/// three coefficients: Q_i = prefactor_i · num_i / (den_i[0] · den_i[1]).
enum class MirrorFactor { mu_eps2, q_eps2, mu_q };
enum class MirrorParam { Q, mu, eps2 };
struct MirrorTerm {
    MirrorParam prefactor;
    MirrorFactor numerator;
    std::array<MirrorFactor, 2> denominator;
};
const std::array<MirrorTerm, 3>& mirror_map_structure();

/// Q1, Q2, Q3 of e^{x+y} + e^x + e^y + Q1 e^{2x} + Q2 e^{2y} + Q3 = 0.
/// Throws singular_parameters on a vanishing denominator.
CurveCoefficients mirror_map(const CurveParams& p);

struct S3Report {
    bool ok;
    std::string violation;  // empty when ok
};

/// μ↔Q fixes Q1 and swaps Q2, Q3; ε²↔μ swaps Q1, Q2 and fixes Q3;
/// ε²↔Q swaps Q1, Q3 and fixes Q2.
S3Report s3_equivariance_check(const CurveParams& p);

/// Coefficients on (e^{x+y}, e^x, e^y, e^{2x}, e^{2y}, 1).
using CurveCoeffs6 = std::array<rational, 6>;

struct SppLimitReport {
    bool ok;
    rational A;      // e^x ↦ A e^x
    rational B;      // e^y ↦ B e^y
    rational scale;  // overall factor
    CurveCoeffs6 limit;
    CurveCoeffs6 spp;
    std::string message;
};

/// The ε² → 0 curve against μ e^{2y} + e^{x+y} + e^x + (1 + Qμ) e^y + Q = 0.
SppLimitReport spp_limit_check(const CurveParams& p);

/// [Z_crystal(θ_n)/C_n]² = [Z_top^SPP]² · ∏(1 − q^k)^k to total degree D.
bool spp_identity_squared(int n, int D);

/// Random triple of positive rationals with small numerators/denominators.
CurveParams random_params(std::uint64_t seed);

std::string to_string(const CurveParams& p);

} // namespace crystal
