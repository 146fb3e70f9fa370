#include "crystal/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "crystal/error.hpp"

namespace crystal {

namespace {

constexpr int kBitsPerVar = 8;
constexpr int kMaxVars = 64 / kBitsPerVar;
constexpr int kMaxCutoff = (1 << kBitsPerVar) - 1;
constexpr std::size_t kProductTableLimit = 2048;

// Exponent vectors of total degree exactly d, lexicographically ascending.
void compositions(int nv, int d, std::vector<int>& cur, std::vector<int>& out) {
    const int pos = static_cast<int>(cur.size());
    if (pos == nv - 1) {
        cur.push_back(d);
        out.insert(out.end(), cur.begin(), cur.end());
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= d; ++a) {
        cur.push_back(a);
        compositions(nv, d - a, cur, out);
        cur.pop_back();
    }
}

} // namespace

MonomialBasis::MonomialBasis(int num_vars, int cutoff) : num_vars_(num_vars), cutoff_(cutoff) {
    std::vector<int> cur;
    for (int d = 0; d <= cutoff; ++d) {
        degree_begin_.push_back(degree_.size());
        const std::size_t before = exps_.size();
        compositions(num_vars, d, cur, exps_);
        const std::size_t added = (exps_.size() - before) / static_cast<std::size_t>(num_vars);
        degree_.insert(degree_.end(), added, d);
    }
    degree_begin_.push_back(degree_.size());

    const std::size_t n = degree_.size();
    packed_.resize(n);
    sorted_keys_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        packed_[i] = pack(exponents(i));
        sorted_keys_.emplace_back(packed_[i], static_cast<std::int32_t>(i));
    }
    std::sort(sorted_keys_.begin(), sorted_keys_.end());

    if (n <= kProductTableLimit) {
        product_table_.assign(n * n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t jend = degree_begin_[cutoff_ - degree_[i] + 1];
            for (std::size_t j = 0; j < jend; ++j) {
                // Packed fields never carry because each exponent is ≤ cutoff.
                const std::uint64_t key = packed_[i] + packed_[j];
                auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(),
                                           std::make_pair(key, std::int32_t{-1}));
                product_table_[i * n + j] = it->second;
            }
        }
    }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int num_vars, int cutoff) {
    if (num_vars < 1 || num_vars > kMaxVars)
        throw dimension_error("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
    if (cutoff < 0 || cutoff > kMaxCutoff)
        throw dimension_error("cutoff must be in [0, " + std::to_string(kMaxCutoff) + "]");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{num_vars, cutoff}];
    if (!slot) slot.reset(new MonomialBasis(num_vars, cutoff));
    return slot;
}

std::uint64_t MonomialBasis::pack(std::span<const int> exps) const noexcept {
    std::uint64_t key = 0;
    for (int e : exps) key = (key << kBitsPerVar) | static_cast<std::uint64_t>(e);
    return key;
}

std::ptrdiff_t MonomialBasis::index_of(std::span<const int> exps) const {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw dimension_error("exponent vector has length " + std::to_string(exps.size()) +
                              ", expected " + std::to_string(num_vars_));
    int deg = 0;
    for (int e : exps) {
        if (e < 0) return -1;
        deg += e;
    }
    if (deg > cutoff_) return -1;
    const std::uint64_t key = pack(exps);
    auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(),
                               std::make_pair(key, std::int32_t{-1}));
    return it->second;
}

std::ptrdiff_t MonomialBasis::product_index(std::size_t i, std::size_t j) const {
    if (degree_[i] + degree_[j] > cutoff_) return -1;
    if (!product_table_.empty()) return product_table_[i * size() + j];
    const std::uint64_t key = packed_[i] + packed_[j];
    auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(),
                               std::make_pair(key, std::int32_t{-1}));
    return it->second;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(int num_vars, int cutoff)
    : basis_(MonomialBasis::get(num_vars, cutoff)), coeffs_(basis_->size()) {}

TruncatedSeries TruncatedSeries::one(int num_vars, int cutoff) {
    return constant(num_vars, cutoff, 1);
}

TruncatedSeries TruncatedSeries::constant(int num_vars, int cutoff, const bigint& c) {
    TruncatedSeries s(num_vars, cutoff);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int num_vars, int cutoff, std::span<const int> exps,
                                          const bigint& coef) {
    TruncatedSeries s(num_vars, cutoff);
    s.add_term(exps, coef);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int num_vars, int cutoff, int var) {
    if (var < 0 || var >= num_vars) throw dimension_error("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return monomial(num_vars, cutoff, e);
}

bigint TruncatedSeries::coefficient(std::span<const int> exps) const {
    const auto idx = basis_->index_of(exps);
    return idx < 0 ? bigint(0) : coeffs_[static_cast<std::size_t>(idx)];
}

void TruncatedSeries::add_term(std::span<const int> exps, const bigint& coef) {
    for (int e : exps)
        if (e < 0) throw dimension_error("negative exponent in truncated series");
    const auto idx = basis_->index_of(exps);
    if (idx >= 0) coeffs_[static_cast<std::size_t>(idx)] += coef;
}

void TruncatedSeries::set_coefficient(std::span<const int> exps, const bigint& coef) {
    for (int e : exps)
        if (e < 0) throw dimension_error("negative exponent in truncated series");
    const auto idx = basis_->index_of(exps);
    if (idx >= 0) coeffs_[static_cast<std::size_t>(idx)] = coef;
}

std::vector<SeriesTerm> TruncatedSeries::terms() const {
    std::vector<SeriesTerm> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        auto e = basis_->exponents(i);
        out.push_back({exponent_vector(e.begin(), e.end()), coeffs_[i]});
    }
    std::sort(out.begin(), out.end(),
              [](const SeriesTerm& a, const SeriesTerm& b) { return a.exp < b.exp; });
    return out;
}

std::size_t TruncatedSeries::term_count() const {
    return static_cast<std::size_t>(std::count_if(
        coeffs_.begin(), coeffs_.end(), [](const bigint& c) { return sgn(c) != 0; }));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const bigint& c) { return sgn(c) == 0; });
}

bool TruncatedSeries::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const bigint& c) { return sgn(c) == 0; });
}

bool TruncatedSeries::is_unit() const { return coeffs_[0] == 1 || coeffs_[0] == -1; }

std::optional<int> TruncatedSeries::min_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return basis_->degree(i);
    return std::nullopt;
}

std::optional<int> TruncatedSeries::min_nonconstant_degree() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return basis_->degree(i);
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int new_cutoff) const {
    if (new_cutoff > cutoff() || new_cutoff < 0)
        throw dimension_error("truncated: new cutoff must lie in [0, cutoff]");
    TruncatedSeries out(num_vars(), new_cutoff);
    // Graded order is a prefix-closed layout, but lexicographic order within a
    // degree is identical in both bases, so a straight copy works.
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other, const char* op) const {
    if (basis_ != other.basis_)
        throw dimension_error(std::string(op) + ": series have (vars, cutoff) = (" +
                              std::to_string(num_vars()) + ", " + std::to_string(cutoff()) +
                              ") vs (" + std::to_string(other.num_vars()) + ", " +
                              std::to_string(other.cutoff()) + ")");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    check_compatible(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    check_compatible(other, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
    *this = *this * other;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const bigint& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

namespace {

template <bool Subtract>
void accumulate_product(const MonomialBasis& basis, std::vector<bigint>& acc,
                        const std::vector<bigint>& b, const std::vector<bigint>& c) {
    const int D = basis.cutoff();
    std::vector<std::size_t> nz_c;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (sgn(c[j]) != 0) nz_c.push_back(j);
    if (nz_c.empty()) return;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) == 0) continue;
        const std::size_t jend = basis.degree_begin(D - basis.degree(i) + 1);
        for (std::size_t j : nz_c) {
            if (j >= jend) break;
            const auto k = static_cast<std::size_t>(basis.product_index(i, j));
            if constexpr (Subtract)
                mpz_submul(acc[k].get_mpz_t(), b[i].get_mpz_t(), c[j].get_mpz_t());
            else
                mpz_addmul(acc[k].get_mpz_t(), b[i].get_mpz_t(), c[j].get_mpz_t());
        }
    }
}

} // namespace

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b, "mul");
    TruncatedSeries out(a.num_vars(), a.cutoff());
    accumulate_product<false>(*a.basis_, out.coeffs_, a.coeffs_, b.coeffs_);
    return out;
}

void TruncatedSeries::add_product(const TruncatedSeries& b, const TruncatedSeries& c) {
    check_compatible(b, "add_product");
    check_compatible(c, "add_product");
    accumulate_product<false>(*basis_, coeffs_, b.coeffs_, c.coeffs_);
}

void TruncatedSeries::sub_product(const TruncatedSeries& b, const TruncatedSeries& c) {
    check_compatible(b, "sub_product");
    check_compatible(c, "sub_product");
    accumulate_product<true>(*basis_, coeffs_, b.coeffs_, c.coeffs_);
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.num_vars() != b.num_vars() || a.cutoff() != b.cutoff()) return false;
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
    TruncatedSeries result = one(num_vars(), cutoff());
    TruncatedSeries base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

std::string TruncatedSeries::to_string(std::span<const std::string> var_names) const {
    std::vector<std::string> names;
    if (var_names.empty())
        names = default_variable_names(num_vars());
    else
        names.assign(var_names.begin(), var_names.end());
    if (static_cast<int>(names.size()) != num_vars())
        throw dimension_error("to_string: wrong number of variable names");

    // Human-facing order: graded, which reads like a power series.
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const bigint& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        bigint mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto e = basis_->exponents(i);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[v];
            if (e[v] > 1) mono += '^' + std::to_string(e[v]);
        }
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << '*' << mono;
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------

TruncatedSeries invert(const TruncatedSeries& a) {
    const bigint& a0 = a.coefficient_at(0);
    if (a0 != 1 && a0 != -1)
        throw not_invertible_error("invert: constant term " + a0.get_str() + " is not a unit");
    const MonomialBasis& basis = a.basis();
    const int D = a.cutoff();
    const std::size_t n = basis.size();

    // b_0 = a_0 (a_0² = 1). For each degree d, the degree-d part of a·b = 0
    // gives a_0 b_m = −Σ_{deg i ≥ 1} a_i b_{m/i}.
    std::vector<bigint> b(n);
    b[0] = a0;
    std::vector<std::size_t> nz_a;
    for (std::size_t i = 1; i < n; ++i)
        if (sgn(a.coefficient_at(i)) != 0) nz_a.push_back(i);

    std::vector<bigint> acc(n);
    for (int d = 1; d <= D; ++d) {
        for (std::size_t i : nz_a) {
            const int di = basis.degree(i);
            if (di > d) break;
            const std::size_t jb = basis.degree_begin(d - di);
            const std::size_t je = basis.degree_begin(d - di + 1);
            for (std::size_t j = jb; j < je; ++j) {
                if (sgn(b[j]) == 0) continue;
                const auto k = static_cast<std::size_t>(basis.product_index(i, j));
                mpz_addmul(acc[k].get_mpz_t(), a.coefficient_at(i).get_mpz_t(), b[j].get_mpz_t());
            }
        }
        for (std::size_t m = basis.degree_begin(d); m < basis.degree_begin(d + 1); ++m) {
            if (sgn(acc[m]) == 0) continue;
            b[m] = -acc[m];
            if (a0 == -1) b[m] = -b[m];
        }
    }
    TruncatedSeries out(a.num_vars(), D);
    for (std::size_t m = 0; m < n; ++m) {
        if (sgn(b[m]) == 0) continue;
        out.add_term(basis.exponents(m), b[m]);
    }
    return out;
}

TruncatedSeries one_plus_power(const TruncatedSeries& x, long a) {
    if (sgn(x.constant_term()) != 0)
        throw invalid_argument("one_plus_power: argument must have zero constant term");
    TruncatedSeries result = TruncatedSeries::one(x.num_vars(), x.cutoff());
    const auto md = x.min_degree();
    if (!md || a == 0) return result;
    TruncatedSeries power = result;
    bigint binom = 1;
    const int kmax = x.cutoff() / *md;
    for (int k = 1; k <= kmax; ++k) {
        // binom(a, k) = binom(a, k−1) · (a − k + 1) / k, exact.
        binom *= bigint(a - k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k));
        if (sgn(binom) == 0) break;
        power = power * x;
        if (power.is_zero()) break;
        result.add_product(power, TruncatedSeries::constant(x.num_vars(), x.cutoff(), binom));
    }
    return result;
}

TruncatedSeries product_over_k(const std::function<TruncatedSeries(int)>& factor, int num_vars,
                               int cutoff, int k_limit) {
    TruncatedSeries result = TruncatedSeries::one(num_vars, cutoff);
    for (int k = 1; k <= k_limit; ++k) {
        TruncatedSeries f = factor(k);
        if (f.num_vars() != num_vars || f.cutoff() != cutoff)
            throw dimension_error("product_over_k: factor has the wrong shape");
        if (f.is_one()) return result;
        result = result * f;
    }
    throw non_termination_error("product_over_k: factors still non-trivial after k = " +
                                std::to_string(k_limit));
}

TruncatedSeries substitute_monomials(const TruncatedSeries& source,
                                     std::span<const exponent_vector> images, int target_vars,
                                     int target_cutoff) {
    if (static_cast<int>(images.size()) != source.num_vars())
        throw dimension_error("substitute: need one image per source variable");
    int min_deg = -1;
    for (const auto& img : images) {
        if (static_cast<int>(img.size()) != target_vars)
            throw dimension_error("substitute: image has the wrong number of variables");
        int deg = 0;
        for (int e : img) {
            if (e < 0) throw dimension_error("substitute: negative exponent in image");
            deg += e;
        }
        if (deg < 1) throw dimension_error("substitute: image of degree 0");
        if (min_deg < 0 || deg < min_deg) min_deg = deg;
    }
    // Source terms above the cutoff land above (cutoff + 1)·min_deg − 1.
    if (target_cutoff > (source.cutoff() + 1) * min_deg - 1)
        throw dimension_error("substitute: target cutoff exceeds what the source determines");
    TruncatedSeries out(target_vars, target_cutoff);
    const MonomialBasis& basis = source.basis();
    std::vector<int> e(static_cast<std::size_t>(target_vars));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sgn(source.coefficient_at(i)) == 0) continue;
        std::fill(e.begin(), e.end(), 0);
        auto src = basis.exponents(i);
        int deg = 0;
        for (std::size_t v = 0; v < src.size(); ++v)
            for (int t = 0; t < target_vars; ++t) {
                e[static_cast<std::size_t>(t)] += src[v] * images[v][static_cast<std::size_t>(t)];
                deg += src[v] * images[v][static_cast<std::size_t>(t)];
            }
        if (deg <= target_cutoff) out.add_term(e, source.coefficient_at(i));
    }
    return out;
}

std::optional<exponent_vector> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.num_vars() != b.num_vars() || a.cutoff() != b.cutoff())
        throw dimension_error("first_difference: incompatible series");
    std::optional<exponent_vector> best;
    const MonomialBasis& basis = a.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (a.coefficient_at(i) == b.coefficient_at(i)) continue;
        auto e = basis.exponents(i);
        exponent_vector v(e.begin(), e.end());
        if (!best || v < *best) best = std::move(v);
    }
    return best;
}

std::vector<std::string> default_variable_names(int num_vars) {
    if (num_vars == 1) return {"q"};
    std::vector<std::string> names;
    for (int i = 0; i < num_vars; ++i) names.push_back("q" + std::to_string(i));
    return names;
}

} // namespace crystal
