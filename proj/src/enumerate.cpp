#include "crystal/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "crystal/error.hpp"

namespace crystal {

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;
constexpr int kCountBits = 8;
constexpr int kMaxCount = (1 << kCountBits) - 1;

enum class Move { add_vertical, remove_vertical, add_horizontal, remove_horizontal };

Move move_for(SliceRule rule, bool transposed) {
    const Relation rel = transposed ? flip(rule.relation) : rule.relation;
    const bool up = rule.direction == Direction::ascending;
    if (rel == Relation::plus) return up ? Move::add_vertical : Move::remove_vertical;
    return up ? Move::add_horizontal : Move::remove_horizontal;
}

// Smallest partition reachable in one step; every valid successor contains it.
Partition greedy_next(const Partition& lam, Move m) {
    std::vector<int> v;
    switch (m) {
    case Move::add_vertical:
    case Move::add_horizontal:
        return lam;
    case Move::remove_vertical:
        for (int p : lam.parts())
            if (p > 1) v.push_back(p - 1);
        return Partition(std::move(v));
    case Move::remove_horizontal:
        for (int i = 1; i < lam.length(); ++i) v.push_back(lam[static_cast<std::size_t>(i)]);
        return Partition(std::move(v));
    }
    return lam;
}

struct pair_hash {
    std::size_t operator()(const std::pair<std::uint32_t, std::uint64_t>& k) const noexcept {
        std::uint64_t h = k.second * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(k.first) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Shared machinery for the DP and the depth-first visitor.
class Evolution {
public:
    Evolution(const ChamberSpec& spec, int D, const EnumerateOptions& opts)
        : spec_(spec), D_(D), opts_(opts), window_(slice_window(spec, D, opts)) {
        const int steps = window_.last - window_.first + 2;
        for (int k = 0; k < steps; ++k)
            moves_.push_back(move_for(slice_rule(spec, window_.first - 1 + k), opts.transposed));
        intern(Partition{});
    }

    const SliceWindow& window() const { return window_; }
    int budget() const { return window_.budget; }
    const Partition& partition(std::uint32_t id) const { return parts_[id]; }

    Move move_at(int t) const { return moves_[static_cast<std::size_t>(t - window_.first + 1)]; }

    std::uint32_t intern(const Partition& p) {
        auto [it, inserted] = ids_.try_emplace(p, static_cast<std::uint32_t>(parts_.size()));
        if (inserted) parts_.push_back(p);
        return it->second;
    }

    // Successors of partition `id` at slice t under the rule of step t.
    const std::vector<std::uint32_t>& successors(std::uint32_t id, int t) {
        const Move m = move_at(t);
        const std::uint64_t key = (static_cast<std::uint64_t>(id) << 2) | static_cast<std::uint64_t>(m);
        auto it = succ_.find(key);
        if (it != succ_.end()) return it->second;
        const Partition lam = parts_[id];
        const int room = budget() - lam.size();
        std::vector<Partition> next;
        switch (m) {
        case Move::add_vertical: next = add_vertical_strips(lam, room, opts_.max_rows); break;
        case Move::remove_vertical: next = remove_vertical_strips(lam); break;
        case Move::add_horizontal: next = add_horizontal_strips(lam, room, opts_.max_rows); break;
        case Move::remove_horizontal: next = remove_horizontal_strips(lam); break;
        }
        std::vector<std::uint32_t> out;
        out.reserve(next.size());
        for (const auto& p : next) out.push_back(intern(p));
        return succ_.emplace(key, std::move(out)).first->second;
    }

    // Minimum number of boxes in slices t..last+1 given λ(t) = id, or
    // kInfeasible if the configuration cannot return to empty in time.
    int lower_bound(std::uint32_t id, int t) {
        if (t == window_.last + 1) return id == 0 ? 0 : kInfeasible;
        const std::uint64_t key =
            (static_cast<std::uint64_t>(id) << 20) | static_cast<std::uint64_t>(t - window_.first + 1);
        auto it = lb_.find(key);
        if (it != lb_.end()) return it->second;
        const int size = parts_[id].size();
        const std::uint32_t next = intern(greedy_next(parts_[id], move_at(t)));
        const int rest = lower_bound(next, t + 1);
        const int value = rest >= kInfeasible ? kInfeasible : size + rest;
        lb_[key] = value;
        return value;
    }

private:
    const ChamberSpec& spec_;
    int D_;
    EnumerateOptions opts_;
    SliceWindow window_;
    std::vector<Move> moves_;
    std::vector<Partition> parts_;
    std::unordered_map<Partition, std::uint32_t> ids_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> succ_;
    std::unordered_map<std::uint64_t, int> lb_;
};

int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

// Exponent vector Σ c_r w_r; throws if it is not a genuine monomial.
std::vector<int> weight_of_counts(const std::vector<WeightMonomial>& w, const std::vector<int>& counts,
                                  const ChamberSpec& spec) {
    const std::size_t L = w.size();
    std::vector<int> e(L, 0);
    for (std::size_t r = 0; r < L; ++r)
        for (std::size_t j = 0; j < L; ++j) e[j] += counts[r] * w[r].exponents[j];
    for (int x : e)
        if (x < 0)
            throw unsupported_chamber("configuration with a negative weight exponent for " +
                                      spec.to_string());
    return e;
}

void check_args(const ChamberSpec& spec, int D) {
    if (D < 0) throw invalid_argument("degree must be non-negative");
    (void)spec;
}

} // namespace

SliceWindow slice_window(const ChamberSpec& spec, int D, const EnumerateOptions& opts) {
    check_args(spec, D);
    const int B = opts.box_budget >= 0 ? opts.box_budget : box_budget(spec, D);
    const auto peaks = peak_slices(spec);
    if (peaks.empty()) throw unsupported_chamber("chamber has no peak slice: " + spec.to_string());
    // Every run of slices containing a given box contains a peak and has
    // at most B slices.
    const int margin = std::max(B - 1, 0) + opts.extra_margin;
    return {peaks.front() - margin, peaks.back() + margin, B};
}

TruncatedSeries enumerate_z(const ChamberSpec& spec, int D, const EnumerateOptions& opts) {
    Evolution evo(spec, D, opts);
    const int L = spec.L();
    const int B = evo.budget();
    if (B > kMaxCount) throw error(error_kind::internal_limit, "box budget too large for enumeration");
    if (L * kCountBits > 64) throw error(error_kind::internal_limit, "too many residues for enumeration");
    const auto weights = chamber_weights(spec);
    const SliceWindow win = evo.window();

    using Key = std::pair<std::uint32_t, std::uint64_t>;
    std::unordered_map<Key, std::uint64_t, pair_hash> cur, next;
    cur[{0u, 0u}] = 1;

    auto used_boxes = [L](std::uint64_t packed) {
        int s = 0;
        for (int r = 0; r < L; ++r) s += static_cast<int>((packed >> (kCountBits * r)) & kMaxCount);
        return s;
    };

    // Step t moves from slice t to slice t + 1.
    for (int t = win.first - 1; t <= win.last; ++t) {
        next.clear();
        const int res = mod(t + 1, L);
        for (const auto& [key, count] : cur) {
            const int used = used_boxes(key.second);
            for (std::uint32_t mu : evo.successors(key.first, t)) {
                const int lb = evo.lower_bound(mu, t + 1);
                if (lb >= kInfeasible || used + lb > B) continue;
                const int size = evo.partition(mu).size();
                const std::uint64_t packed =
                    key.second + (static_cast<std::uint64_t>(size) << (kCountBits * res));
                std::uint64_t& slot = next[{mu, packed}];
                if (__builtin_add_overflow(slot, count, &slot))
                    throw error(error_kind::internal_limit, "configuration count overflow");
            }
        }
        std::swap(cur, next);
    }

    TruncatedSeries z(L, D);
    std::vector<int> counts(static_cast<std::size_t>(L));
    for (const auto& [key, count] : cur) {
        if (key.first != 0) continue;
        for (int r = 0; r < L; ++r)
            counts[static_cast<std::size_t>(r)] = static_cast<int>((key.second >> (kCountBits * r)) & kMaxCount);
        const auto e = weight_of_counts(weights, counts, spec);
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= D) {
            bigint c;
            mpz_import(c.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
            z.add_term(e, c);
        }
    }
    return z;
}

TruncatedSeries enumerate_z_transposed(const ChamberSpec& spec, int D) {
    EnumerateOptions opts;
    opts.transposed = true;
    return enumerate_z(spec, D, opts);
}

std::vector<int> Configuration::boxes_per_residue(int L) const {
    std::vector<int> c(static_cast<std::size_t>(L), 0);
    for (std::size_t k = 0; k < slices.size(); ++k)
        c[static_cast<std::size_t>(mod(first + static_cast<int>(k), L))] += slices[k].size();
    return c;
}

int Configuration::total_boxes() const {
    int s = 0;
    for (const auto& p : slices) s += p.size();
    return s;
}

std::vector<int> configuration_weight(const ChamberSpec& spec, const Configuration& c) {
    const auto weights = chamber_weights(spec);
    const auto counts = c.boxes_per_residue(spec.L());
    std::vector<int> e(static_cast<std::size_t>(spec.L()), 0);
    for (int r = 0; r < spec.L(); ++r)
        for (int j = 0; j < spec.L(); ++j)
            e[static_cast<std::size_t>(j)] +=
                counts[static_cast<std::size_t>(r)] * weights[static_cast<std::size_t>(r)].exponents[static_cast<std::size_t>(j)];
    return e;
}

void for_each_configuration(const ChamberSpec& spec, int D, const EnumerateOptions& opts,
                            const std::function<void(const Configuration&)>& visit) {
    Evolution evo(spec, D, opts);
    const SliceWindow win = evo.window();
    const int B = evo.budget();
    const auto weights = chamber_weights(spec);
    const int L = spec.L();

    Configuration conf{win.first, {}};
    std::vector<int> counts(static_cast<std::size_t>(L), 0);

    // dfs(id, t, used): λ(t) = id has been placed (for t ≥ first).
    std::function<void(std::uint32_t, int, int)> dfs = [&](std::uint32_t id, int t, int used) {
        if (t == win.last + 1) {
            if (id != 0) return;
            const auto e = weight_of_counts(weights, counts, spec);
            int deg = 0;
            for (int x : e) deg += x;
            if (deg <= D) visit(conf);
            return;
        }
        // Copy: the cache may rehash during recursion.
        const std::vector<std::uint32_t> succ = evo.successors(id, t);
        for (std::uint32_t mu : succ) {
            const int lb = evo.lower_bound(mu, t + 1);
            if (lb >= kInfeasible || used + lb > B) continue;
            const int size = evo.partition(mu).size();
            const bool inside = t + 1 <= win.last;
            if (inside) {
                conf.slices.push_back(evo.partition(mu));
                counts[static_cast<std::size_t>(mod(t + 1, L))] += size;
            }
            dfs(mu, t + 1, used + size);
            if (inside) {
                conf.slices.pop_back();
                counts[static_cast<std::size_t>(mod(t + 1, L))] -= size;
            }
        }
    };
    dfs(0, win.first - 1, 0);
}

bool satisfies_rules(const ChamberSpec& spec, const Configuration& c, bool transposed) {
    auto slice = [&](int t) -> Partition {
        const int k = t - c.first;
        if (k < 0 || k >= static_cast<int>(c.slices.size())) return Partition{};
        return c.slices[static_cast<std::size_t>(k)];
    };
    const int last = c.first + static_cast<int>(c.slices.size()) - 1;
    for (int t = c.first - 1; t <= last; ++t) {
        const SliceRule rule = slice_rule(spec, t);
        const Relation rel = transposed ? flip(rule.relation) : rule.relation;
        const Partition a = slice(t);
        const Partition b = slice(t + 1);
        const bool ok = rule.direction == Direction::ascending
                            ? (rel == Relation::plus ? interlace_plus(b, a) : interlace_minus(b, a))
                            : (rel == Relation::plus ? interlace_plus(a, b) : interlace_minus(a, b));
        if (!ok) return false;
    }
    return true;
}

} // namespace crystal
