#pragma once

#include <string>
#include <vector>

namespace crystal {

/// Geometry and stability chamber (L, ρ, θ). Half-integers h are stored
/// doubled, as odd integers 2h.
class ChamberSpec {
public:
    /// Validates: ρ entries ±1, θ images odd and pairwise distinct mod 2L,
    /// Σ θ(i − 1/2) = Σ (i − 1/2).
    static ChamberSpec make(int L, std::vector<int> rho, std::vector<int> theta_doubled);

    int L() const noexcept { return L_; }
    const std::vector<int>& rho() const noexcept { return rho_; }
    const std::vector<int>& theta_images() const noexcept { return theta_; }

    /// θ extended by θ(h + L) = θ(h) + L. Argument and result doubled.
    int theta(int h2) const;
    int theta_inverse(int h2) const;
    /// ρ at the representative of h in {1/2, …, L − 1/2}.
    int sigma(int h2) const;

    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const ChamberSpec&, const ChamberSpec&) = default;

private:
    ChamberSpec() = default;
    int residue_index(int h2) const;

    int L_ = 1;
    std::vector<int> rho_;
    std::vector<int> theta_;
};

ChamberSpec c3_spec();
/// L = 2, ρ = (+1, −1), θ: 1/2 ↦ 1/2 − n, 3/2 ↦ 3/2 + n.
ChamberSpec conifold_theta(int n);

enum class Relation { plus, minus };
enum class Direction { ascending, descending };

struct SliceRule {
    Relation relation;
    Direction direction;
    friend bool operator==(const SliceRule&, const SliceRule&) = default;
};

/// Rule between slices i and i + 1, read off θ⁻¹(i + 1/2).
SliceRule slice_rule(const ChamberSpec& spec, int i);

Relation flip(Relation r) noexcept;
const char* to_string(Relation r) noexcept;
const char* to_string(Direction d) noexcept;

struct WeightMonomial {
    std::vector<int> exponents;
    int degree() const;
    bool is_monomial() const;  // all exponents ≥ 0
    friend bool operator==(const WeightMonomial&, const WeightMonomial&) = default;
};

/// q_i^θ as a Laurent monomial in q_0..q_{L−1}; residue i in [0, L).
WeightMonomial chamber_weight(const ChamberSpec& spec, int i);
std::vector<WeightMonomial> chamber_weights(const ChamberSpec& spec);

/// Slices i with rule(i − 1) ascending and rule(i) descending.
std::vector<int> peak_slices(const ChamberSpec& spec);

/// Upper bound on |U| / deg(U) over every finite interval of slices U that
/// can be the support of a single box column (rule ascending into U,
/// descending out of it). At least 1. Throws unsupported_chamber when some
/// such interval has total weight degree ≤ 0.
struct BoxRatio {
    long num;
    long den;
};
BoxRatio box_ratio(const ChamberSpec& spec);

/// Largest number of boxes a configuration of weight degree ≤ D can have.
int box_budget(const ChamberSpec& spec, int D);

} // namespace crystal
