#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/chamber.hpp"
#include "crystal/determinant.hpp"
#include "crystal/series.hpp"

namespace crystal {

struct DagEdge {
    int from;
    int to;
    TruncatedSeries weight;
};

/// Directed graph with (t, h) vertex coordinates and monomial edge weights.
class WeightedDag {
public:
    WeightedDag(int num_vars, int cutoff) : num_vars_(num_vars), cutoff_(cutoff) {}

    int num_vars() const noexcept { return num_vars_; }
    int cutoff() const noexcept { return cutoff_; }

    /// Returns the existing id if (t, h) is already present.
    int add_vertex(int t, int h);
    std::optional<int> find_vertex(int t, int h) const;
    void add_edge(int from, int to, TruncatedSeries weight);
    void set_terminals(std::vector<int> sources, std::vector<int> sinks);

    int vertex_count() const noexcept { return static_cast<int>(coords_.size()); }
    std::pair<int, int> coords(int v) const { return coords_.at(static_cast<std::size_t>(v)); }
    const std::vector<DagEdge>& edges() const noexcept { return edges_; }
    const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& sources() const noexcept { return sources_; }
    const std::vector<int>& sinks() const noexcept { return sinks_; }

    /// Throws invalid_graph on a directed cycle.
    std::vector<int> topological_order() const;

    /// Weight of the edge from → to, if present (the first one when parallel).
    std::optional<TruncatedSeries> edge_weight(int from, int to) const;

private:
    int num_vars_;
    int cutoff_;
    std::vector<std::pair<int, int>> coords_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<DagEdge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
};

/// G(a_i, b_j) = Σ over paths a_i → b_j of the product of edge weights.
SeriesMatrix path_matrix(const WeightedDag& g);

/// det G.
TruncatedSeries lgv_det(const WeightedDag& g);

/// Σ_σ sgn(σ) Σ over vertex-disjoint families (a_i → b_σ(i)) of ∏ w(p_i),
/// by exhaustive enumeration. For graphs where only the identity pairing
/// admits disjoint families this is the plain non-intersecting sum.
/// Throws oracle_too_large when more than `max_combinations` families
/// would have to be inspected.
TruncatedSeries nonintersecting_bruteforce(const WeightedDag& g,
                                           std::uint64_t max_combinations = 5'000'000);

/// The same, restricted to the identity pairing a_i → b_i.
TruncatedSeries nonintersecting_identity(const WeightedDag& g,
                                         std::uint64_t max_combinations = 5'000'000);

/// All paths from `from` to `to`, as vertex sequences.
std::vector<std::vector<int>> all_paths(const WeightedDag& g, int from, int to,
                                        std::uint64_t limit = 1'000'000);

/// Six-variable graph with sources a1, a2 and sinks b1, b2 and weights
/// w1..w6 = q0..q5 (cutoff 4).
WeightedDag six_weight_graph();

/// Layered DAG with up to 12 vertices, N ∈ {1, 2, 3} terminals and
/// single-variable monomial weights, reproducible from the seed.
WeightedDag random_layered_dag(std::uint64_t seed);

/// Non-intersecting walker graph for an identity-chamber spec: N walkers,
/// heights 0..N−1+D, slices [−(D+2)L, (D+2)L]. Vertices at t = 2·slice
/// carry the profile h_k(slice) = λ_{N−k+1}(slice) + k − 1.
WeightedDag walker_graph(const ChamberSpec& spec, int N, int D);

struct BijectionReport {
    bool ok;
    std::string message;
    std::size_t configurations_checked;
};

/// Maps every configuration with at most N rows per slice and weight
/// degree ≤ D to a path family in walker_graph(spec, N, D) and back.
BijectionReport profile_bijection_check(const ChamberSpec& spec, int N, int D);

} // namespace crystal
