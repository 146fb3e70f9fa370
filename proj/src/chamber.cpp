#include "crystal/chamber.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

ChamberSpec ChamberSpec::make(int L, std::vector<int> rho, std::vector<int> theta_doubled) {
    if (L < 1) throw invalid_argument("L must be positive");
    if (static_cast<int>(rho.size()) != L)
        throw invalid_argument("rho must have exactly L entries");
    if (static_cast<int>(theta_doubled.size()) != L)
        throw invalid_argument("theta must have exactly L images");
    for (int r : rho)
        if (r != 1 && r != -1) throw invalid_argument("rho entries must be +1 or -1");
    std::set<int> residues;
    long sum = 0;
    for (int t : theta_doubled) {
        if (mod(t, 2) != 1) throw invalid_argument("theta images must be half-integers (odd when doubled)");
        if (!residues.insert(mod(t, 2 * L)).second)
            throw invalid_argument("theta images must be distinct modulo L");
        sum += t;
    }
    if (sum != static_cast<long>(L) * L)
        throw invalid_argument("theta violates the balance condition: sum of images " +
                               std::to_string(sum) + "/2, expected " + std::to_string(L * L) + "/2");
    ChamberSpec s;
    s.L_ = L;
    s.rho_ = std::move(rho);
    s.theta_ = std::move(theta_doubled);
    return s;
}

int ChamberSpec::residue_index(int h2) const {
    if (mod(h2, 2) != 1) throw invalid_argument("expected a half-integer (odd doubled value)");
    return (mod(h2, 2 * L_) - 1) / 2;
}

int ChamberSpec::theta(int h2) const {
    const int j = residue_index(h2);
    const int shift = floor_div(h2 - (2 * j + 1), 2 * L_);
    return theta_[static_cast<std::size_t>(j)] + 2 * L_ * shift;
}

int ChamberSpec::theta_inverse(int h2) const {
    if (mod(h2, 2) != 1) throw invalid_argument("expected a half-integer (odd doubled value)");
    for (int j = 0; j < L_; ++j) {
        const int img = theta_[static_cast<std::size_t>(j)];
        if (mod(img - h2, 2 * L_) == 0) return 2 * j + 1 + (h2 - img);
    }
    throw error(error_kind::internal_limit, "theta_inverse: no preimage (invalid spec)");
}

int ChamberSpec::sigma(int h2) const { return rho_[static_cast<std::size_t>(residue_index(h2))]; }

bool ChamberSpec::is_identity() const {
    for (int j = 0; j < L_; ++j)
        if (theta_[static_cast<std::size_t>(j)] != 2 * j + 1) return false;
    return true;
}

std::string ChamberSpec::to_string() const {
    std::string s = "L=" + std::to_string(L_) + " rho=(";
    for (int i = 0; i < L_; ++i) s += (i ? "," : "") + std::to_string(rho_[static_cast<std::size_t>(i)]);
    s += ") theta=(";
    for (int i = 0; i < L_; ++i) {
        const int t = theta_[static_cast<std::size_t>(i)];
        s += (i ? "," : "") + std::to_string(t) + "/2";
    }
    return s + ")";
}

ChamberSpec c3_spec() { return ChamberSpec::make(1, {1}, {1}); }

ChamberSpec conifold_theta(int n) {
    if (n < 0) throw invalid_argument("chamber index must be non-negative");
    return ChamberSpec::make(2, {1, -1}, {1 - 2 * n, 3 + 2 * n});
}

SliceRule slice_rule(const ChamberSpec& spec, int i) {
    const int t = spec.theta_inverse(2 * i + 1);
    return {spec.sigma(t) == 1 ? Relation::plus : Relation::minus,
            t < 0 ? Direction::ascending : Direction::descending};
}

Relation flip(Relation r) noexcept { return r == Relation::plus ? Relation::minus : Relation::plus; }

const char* to_string(Relation r) noexcept { return r == Relation::plus ? "plus" : "minus"; }

const char* to_string(Direction d) noexcept {
    return d == Direction::ascending ? "ascending" : "descending";
}

int WeightMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool WeightMonomial::is_monomial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e >= 0; });
}

WeightMonomial chamber_weight(const ChamberSpec& spec, int i) {
    const int L = spec.L();
    if (i < 0 || i >= L) throw invalid_argument("chamber_weight: residue out of range");
    const int a = spec.theta_inverse(2 * i - 1);
    const int b = spec.theta_inverse(2 * i + 1);
    WeightMonomial w{std::vector<int>(static_cast<std::size_t>(L), 0)};
    // q_{a+1/2} ⋯ q_{b−1/2} when a < b, the reciprocal of q_{b+1/2} ⋯ q_{a−1/2} otherwise.
    if (a < b) {
        for (int j = (a + 1) / 2; j <= (b - 1) / 2; ++j) ++w.exponents[static_cast<std::size_t>(mod(j, L))];
    } else {
        for (int j = (b + 1) / 2; j <= (a - 1) / 2; ++j) --w.exponents[static_cast<std::size_t>(mod(j, L))];
    }
    return w;
}

std::vector<WeightMonomial> chamber_weights(const ChamberSpec& spec) {
    std::vector<WeightMonomial> out;
    for (int i = 0; i < spec.L(); ++i) out.push_back(chamber_weight(spec, i));
    return out;
}

namespace {

// Rules can only differ from the asymptotic ones (ascending far left,
// descending far right) for |i| below this bound.
int variable_region(const ChamberSpec& spec) {
    int m = 0;
    for (int j = 0; j < spec.L(); ++j)
        m = std::max(m, std::abs(spec.theta_images()[static_cast<std::size_t>(j)] - (2 * j + 1)));
    return m / 2 + spec.L() + 1;
}

} // namespace

std::vector<int> peak_slices(const ChamberSpec& spec) {
    const int R = variable_region(spec);
    std::vector<int> peaks;
    for (int i = -R; i <= R; ++i)
        if (slice_rule(spec, i - 1).direction == Direction::ascending &&
            slice_rule(spec, i).direction == Direction::descending)
            peaks.push_back(i);
    return peaks;
}

BoxRatio box_ratio(const ChamberSpec& spec) {
    const int L = spec.L();
    const auto weights = chamber_weights(spec);
    {
        int total = 0;
        for (const auto& w : weights) total += w.degree();
        if (total != L)
            throw unsupported_chamber("chamber weights do not multiply to q_0...q_{L-1}: " +
                                      spec.to_string());
    }
    // Intervals whose endpoints lie beyond the variable region reduce to ones
    // inside it by dropping whole periods, each contributing L slices and
    // weight degree L, which only moves the ratio towards 1.
    const int R = variable_region(spec) + 2 * L;
    BoxRatio best{1, 1};
    for (int a = -R; a <= R; ++a) {
        if (slice_rule(spec, a - 1).direction != Direction::ascending) continue;
        long deg = 0;
        for (int b = a; b <= R; ++b) {
            deg += chamber_weight(spec, mod(b, L)).degree();
            if (slice_rule(spec, b).direction != Direction::descending) continue;
            const long len = b - a + 1;
            if (deg <= 0)
                throw unsupported_chamber("slice interval [" + std::to_string(a) + ", " +
                                          std::to_string(b) + "] has weight degree " +
                                          std::to_string(deg) + " for " + spec.to_string());
            if (len * best.den > best.num * deg) best = {len, deg};
        }
    }
    return best;
}

int box_budget(const ChamberSpec& spec, int D) {
    if (D < 0) throw invalid_argument("degree must be non-negative");
    const BoxRatio r = box_ratio(spec);
    return static_cast<int>(static_cast<long>(D) * r.num / r.den);
}

} // namespace crystal
