#include "crystal/lgv.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "crystal/enumerate.hpp"
#include "crystal/error.hpp"

namespace crystal {

int WeightedDag::add_vertex(int t, int h) {
    auto [it, inserted] = index_.try_emplace({t, h}, vertex_count());
    if (inserted) {
        coords_.emplace_back(t, h);
        out_.emplace_back();
    }
    return it->second;
}

std::optional<int> WeightedDag::find_vertex(int t, int h) const {
    auto it = index_.find({t, h});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void WeightedDag::add_edge(int from, int to, TruncatedSeries weight) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw invalid_graph("edge endpoint out of range");
    if (weight.num_vars() != num_vars_ || weight.cutoff() != cutoff_)
        throw dimension_error("edge weight has the wrong shape");
    out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, to, std::move(weight)});
}

void WeightedDag::set_terminals(std::vector<int> sources, std::vector<int> sinks) {
    if (sources.size() != sinks.size()) throw invalid_graph("need as many sinks as sources");
    if (sources.empty()) throw invalid_graph("need at least one source");
    auto distinct = [this](std::vector<int> v) {
        for (int x : v)
            if (x < 0 || x >= vertex_count()) throw invalid_graph("terminal out of range");
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(sources)) throw invalid_graph("sources must be pairwise distinct");
    if (!distinct(sinks)) throw invalid_graph("sinks must be pairwise distinct");
    sources_ = std::move(sources);
    sinks_ = std::move(sinks);
}

std::vector<int> WeightedDag::topological_order() const {
    std::vector<int> indeg(coords_.size(), 0);
    for (const auto& e : edges_) ++indeg[static_cast<std::size_t>(e.to)];
    std::vector<int> order, stack;
    for (int v = vertex_count() - 1; v >= 0; --v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int ei : out_[static_cast<std::size_t>(v)]) {
            const int w = edges_[static_cast<std::size_t>(ei)].to;
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != vertex_count()) throw invalid_graph("graph has a directed cycle");
    return order;
}

std::optional<TruncatedSeries> WeightedDag::edge_weight(int from, int to) const {
    for (int ei : out_.at(static_cast<std::size_t>(from)))
        if (edges_[static_cast<std::size_t>(ei)].to == to) return edges_[static_cast<std::size_t>(ei)].weight;
    return std::nullopt;
}

SeriesMatrix path_matrix(const WeightedDag& g) {
    if (g.sources().empty()) throw invalid_graph("graph has no terminals");
    const auto order = g.topological_order();
    const std::size_t N = g.sources().size();
    SeriesMatrix m(N);
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<TruncatedSeries> acc(static_cast<std::size_t>(g.vertex_count()),
                                         TruncatedSeries(g.num_vars(), g.cutoff()));
        acc[static_cast<std::size_t>(g.sources()[i])] = TruncatedSeries::one(g.num_vars(), g.cutoff());
        for (int v : order) {
            const auto& here = acc[static_cast<std::size_t>(v)];
            if (here.is_zero()) continue;
            for (int ei : g.out_edges(v)) {
                const auto& e = g.edges()[static_cast<std::size_t>(ei)];
                acc[static_cast<std::size_t>(e.to)].add_product(here, e.weight);
            }
        }
        for (std::size_t j = 0; j < N; ++j) m[i].push_back(acc[static_cast<std::size_t>(g.sinks()[j])]);
    }
    return m;
}

TruncatedSeries lgv_det(const WeightedDag& g) { return determinant(path_matrix(g)); }

std::vector<std::vector<int>> all_paths(const WeightedDag& g, int from, int to, std::uint64_t limit) {
    g.topological_order();  // rejects cycles
    std::vector<std::vector<int>> out;
    std::vector<int> cur{from};
    std::function<void(int)> walk = [&](int v) {
        if (v == to) {
            out.push_back(cur);
            if (out.size() > limit) throw oracle_too_large("too many paths for the brute-force oracle");
            return;
        }
        for (int ei : g.out_edges(v)) {
            const int w = g.edges()[static_cast<std::size_t>(ei)].to;
            cur.push_back(w);
            walk(w);
            cur.pop_back();
        }
    };
    walk(from);
    return out;
}

namespace {

struct WeightedPath {
    std::vector<std::uint64_t> mask;
    TruncatedSeries weight;
};

std::vector<WeightedPath> weighted_paths(const WeightedDag& g, int from, int to, std::uint64_t limit) {
    const std::size_t words = (static_cast<std::size_t>(g.vertex_count()) + 63) / 64;
    std::vector<WeightedPath> out;
    for (const auto& p : all_paths(g, from, to, limit)) {
        WeightedPath wp{std::vector<std::uint64_t>(words, 0), TruncatedSeries::one(g.num_vars(), g.cutoff())};
        for (std::size_t k = 0; k < p.size(); ++k) {
            wp.mask[static_cast<std::size_t>(p[k]) / 64] |= 1ULL << (p[k] % 64);
            if (k + 1 < p.size()) wp.weight *= *g.edge_weight(p[k], p[k + 1]);
        }
        out.push_back(std::move(wp));
    }
    return out;
}

TruncatedSeries disjoint_sum(const WeightedDag& g, bool all_pairings, std::uint64_t max_combinations) {
    const std::size_t N = g.sources().size();
    if (N == 0) throw invalid_graph("graph has no terminals");
    std::vector<std::vector<std::vector<WeightedPath>>> paths(N, std::vector<std::vector<WeightedPath>>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (all_pairings || i == j)
                paths[i][j] = weighted_paths(g, g.sources()[i], g.sinks()[j], max_combinations);

    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t budget = 0;
    do {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < N; ++i) {
            const auto n = static_cast<std::uint64_t>(paths[i][perm[i]].size());
            c = n == 0 ? 0 : (c > max_combinations / n ? max_combinations + 1 : c * n);
        }
        budget += c;
        if (budget > max_combinations) throw oracle_too_large("too many path families for the brute-force oracle");
    } while (all_pairings && std::next_permutation(perm.begin(), perm.end()));

    TruncatedSeries total(g.num_vars(), g.cutoff());
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t words = (static_cast<std::size_t>(g.vertex_count()) + 63) / 64;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b)
                if (perm[a] > perm[b]) ++inversions;
        TruncatedSeries partial(g.num_vars(), g.cutoff());
        std::vector<std::uint64_t> used(words, 0);
        std::function<void(std::size_t, const TruncatedSeries&)> pick = [&](std::size_t i, const TruncatedSeries& w) {
            if (i == N) {
                partial += w;
                return;
            }
            for (const auto& p : paths[i][perm[i]]) {
                bool clash = false;
                for (std::size_t k = 0; k < words && !clash; ++k) clash = (used[k] & p.mask[k]) != 0;
                if (clash) continue;
                for (std::size_t k = 0; k < words; ++k) used[k] |= p.mask[k];
                pick(i + 1, w * p.weight);
                for (std::size_t k = 0; k < words; ++k) used[k] &= ~p.mask[k];
            }
        };
        pick(0, TruncatedSeries::one(g.num_vars(), g.cutoff()));
        if (inversions % 2) total -= partial;
        else total += partial;
    } while (all_pairings && std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TruncatedSeries nonintersecting_bruteforce(const WeightedDag& g, std::uint64_t max_combinations) {
    return disjoint_sum(g, true, max_combinations);
}

TruncatedSeries nonintersecting_identity(const WeightedDag& g, std::uint64_t max_combinations) {
    return disjoint_sum(g, false, max_combinations);
}

WeightedDag six_weight_graph() {
    constexpr int nv = 6, D = 4;
    WeightedDag g(nv, D);
    const int a1 = g.add_vertex(0, 0), a2 = g.add_vertex(0, 1);
    const int v = g.add_vertex(1, 0), u = g.add_vertex(1, 1);
    const int b1 = g.add_vertex(2, 0), b2 = g.add_vertex(2, 1);
    auto w = [](int i) { return TruncatedSeries::variable(nv, D, i - 1); };
    g.add_edge(a1, v, w(1));
    g.add_edge(a2, v, w(2));
    g.add_edge(a2, u, w(3));
    g.add_edge(v, b1, w(4));
    g.add_edge(u, b2, w(5));
    g.add_edge(v, b2, w(6));
    g.set_terminals({a1, a2}, {b1, b2});
    return g;
}

WeightedDag random_layered_dag(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto chance = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

    const int N = uniform(1, 3);
    const int layers = uniform(3, 4);
    std::vector<int> widths(static_cast<std::size_t>(layers));
    int total = 0;
    for (int l = 0; l < layers; ++l) {
        const bool terminal = l == 0 || l == layers - 1;
        widths[static_cast<std::size_t>(l)] = terminal ? N : uniform(1, 3);
        total += widths[static_cast<std::size_t>(l)];
    }
    while (total > 12) {
        // Shrink an interior layer; terminal layers keep N vertices.
        for (int l = 1; l + 1 < layers && total > 12; ++l)
            if (widths[static_cast<std::size_t>(l)] > 1) {
                --widths[static_cast<std::size_t>(l)];
                --total;
            }
    }
    constexpr int D = 12;
    WeightedDag g(1, D);
    std::vector<std::vector<int>> ids(static_cast<std::size_t>(layers));
    for (int l = 0; l < layers; ++l)
        for (int h = 0; h < widths[static_cast<std::size_t>(l)]; ++h)
            ids[static_cast<std::size_t>(l)].push_back(g.add_vertex(l, h));
    auto weight = [&]() {
        const std::vector<int> e{uniform(0, 2)};
        return TruncatedSeries::monomial(1, D, e);
    };
    for (int l = 0; l + 1 < layers; ++l)
        for (int a : ids[static_cast<std::size_t>(l)]) {
            for (int b : ids[static_cast<std::size_t>(l + 1)])
                if (chance(0.6)) g.add_edge(a, b, weight());
            if (l + 2 < layers)
                for (int b : ids[static_cast<std::size_t>(l + 2)])
                    if (chance(0.15)) g.add_edge(a, b, weight());
        }
    g.set_terminals(ids.front(), ids.back());
    return g;
}

namespace {

int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

// Weight of one unit of height change during step s (slice s → s + 1).
// Up-moves happen only on ascending steps (s < 0 for θ = id), down-moves on
// descending ones (s ≥ 0); an up at s and a later down at s' together give
// q_{s+1} ⋯ q_{s'}, one factor per slice the box occupies.
TruncatedSeries unit_weight(int L, int D, int s) {
    std::vector<int> e(static_cast<std::size_t>(L), 0);
    if (s < 0)
        for (int t = s + 1; t <= 0; ++t) ++e[static_cast<std::size_t>(mod(t, L))];
    else
        for (int t = 1; t <= s; ++t) ++e[static_cast<std::size_t>(mod(t, L))];
    return TruncatedSeries::monomial(L, D, e);
}

struct WalkerLayout {
    int first;  // first slice
    int last;   // last slice
    int top;    // highest height
};

WalkerLayout walker_layout(const ChamberSpec& spec, int N, int D) {
    const int span = (D + 2) * spec.L();
    return {-span, span, N - 1 + D};
}

} // namespace

WeightedDag walker_graph(const ChamberSpec& spec, int N, int D) {
    if (!spec.is_identity())
        throw unsupported_chamber("walker graphs are implemented for theta = id only");
    if (N < 1) throw invalid_argument("need at least one walker");
    if (D < 0) throw invalid_argument("degree must be non-negative");
    const int L = spec.L();
    const WalkerLayout lay = walker_layout(spec, N, D);
    WeightedDag g(L, D);
    const TruncatedSeries one = TruncatedSeries::one(L, D);

    for (int s = lay.first; s <= lay.last; ++s)
        for (int h = 0; h <= lay.top; ++h) g.add_vertex(2 * s, h);

    for (int s = lay.first; s < lay.last; ++s) {
        const SliceRule rule = slice_rule(spec, s);
        const int dir = rule.direction == Direction::ascending ? 1 : -1;
        const TruncatedSeries unit = unit_weight(L, D, s);
        for (int h = 0; h <= lay.top; ++h) {
            const int here = *g.find_vertex(2 * s, h);
            const int mid = g.add_vertex(2 * s + 1, h);
            g.add_edge(here, mid, one);
            g.add_edge(mid, *g.find_vertex(2 * s + 2, h), one);
        }
        for (int h = 0; h <= lay.top; ++h) {
            const int h2 = h + dir;
            if (h2 < 0 || h2 > lay.top || unit.is_zero()) continue;
            if (rule.relation == Relation::plus)
                // diagonal: one unit in a single step
                g.add_edge(*g.find_vertex(2 * s, h), *g.find_vertex(2 * s + 1, h2), unit);
            else
                // "stay or jump": a vertical run on the middle layer
                g.add_edge(*g.find_vertex(2 * s + 1, h), *g.find_vertex(2 * s + 1, h2), unit);
        }
    }
    std::vector<int> src, snk;
    for (int k = 1; k <= N; ++k) {
        src.push_back(*g.find_vertex(2 * lay.first, k - 1));
        snk.push_back(*g.find_vertex(2 * lay.last, k - 1));
    }
    g.set_terminals(std::move(src), std::move(snk));
    return g;
}

BijectionReport profile_bijection_check(const ChamberSpec& spec, int N, int D) {
    const WeightedDag g = walker_graph(spec, N, D);
    const WalkerLayout lay = walker_layout(spec, N, D);
    const int L = spec.L();
    BijectionReport report{true, "", 0};

    EnumerateOptions opts;
    opts.max_rows = N;
    for_each_configuration(spec, D, opts, [&](const Configuration& c) {
        if (!report.ok) return;
        ++report.configurations_checked;
        auto fail = [&](const std::string& why) {
            report.ok = false;
            std::string shape;
            for (const auto& p : c.slices) shape += p.to_string();
            report.message = why + " for configuration starting at slice " + std::to_string(c.first) + ": " + shape;
        };
        auto slice = [&](int s) -> Partition {
            const int k = s - c.first;
            if (k < 0 || k >= static_cast<int>(c.slices.size())) return Partition{};
            return c.slices[static_cast<std::size_t>(k)];
        };
        if (c.first < lay.first || c.first + static_cast<int>(c.slices.size()) - 1 > lay.last)
            return fail("configuration exceeds the walker time window");

        // configuration → heights
        auto height = [&](int k, int s) {
            return slice(s)[static_cast<std::size_t>(N - k)] + k - 1;
        };
        // heights → paths
        std::vector<std::vector<int>> paths(static_cast<std::size_t>(N));
        TruncatedSeries weight = TruncatedSeries::one(L, D);
        std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int k = 1; k <= N; ++k) {
            auto& p = paths[static_cast<std::size_t>(k - 1)];
            for (int s = lay.first; s <= lay.last; ++s) {
                const int h = height(k, s);
                if (k > 1 && h <= height(k - 1, s)) return fail("heights not strictly increasing");
                auto v = g.find_vertex(2 * s, h);
                if (!v) return fail("height outside the graph");
                p.push_back(*v);
                if (s == lay.last) break;
                const int h_next = height(k, s + 1);
                if (slice_rule(spec, s).relation == Relation::plus) {
                    auto m = g.find_vertex(2 * s + 1, h_next);
                    if (!m) return fail("height outside the graph");
                    p.push_back(*m);
                } else {
                    const int step = h_next >= h ? 1 : -1;
                    for (int x = h;; x += step) {
                        p.push_back(*g.find_vertex(2 * s + 1, x));
                        if (x == h_next) break;
                    }
                }
            }
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                auto w = g.edge_weight(p[i], p[i + 1]);
                if (!w) return fail("path uses a missing edge");
                weight *= *w;
            }
            for (int v : p) {
                if (used[static_cast<std::size_t>(v)]) return fail("paths intersect");
                used[static_cast<std::size_t>(v)] = 1;
            }
            if (p.front() != g.sources()[static_cast<std::size_t>(k - 1)] ||
                p.back() != g.sinks()[static_cast<std::size_t>(k - 1)])
                return fail("path does not join its terminals");
        }
        const auto e = configuration_weight(spec, c);
        if (!(weight == TruncatedSeries::monomial(L, D, e))) return fail("path weight differs from configuration weight");

        // paths → heights → configuration
        for (std::size_t k = 0; k < paths.size(); ++k) {
            const auto& p = paths[k];
            std::vector<int> heights;
            for (int v : p) {
                auto [t, h] = g.coords(v);
                if (mod(t, 2) == 0) heights.push_back(h);
            }
            paths[k] = heights;
        }
        for (int s = lay.first; s <= lay.last; ++s) {
            std::vector<int> rows;
            for (int j = 1; j <= N; ++j) {
                const int k = N - j + 1;
                rows.push_back(paths[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - lay.first)] - (k - 1));
            }
            if (!(Partition(rows) == slice(s))) return fail("round trip changed slice " + std::to_string(s));
        }
    });
    if (report.ok)
        report.message = std::to_string(report.configurations_checked) + " configurations round-tripped";
    return report;
}

} // namespace crystal
