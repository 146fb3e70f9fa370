#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crystal/chamber.hpp"
#include "crystal/partition.hpp"
#include "crystal/series.hpp"

namespace crystal {

struct EnumerateOptions {
    bool transposed = false;  // flip plus and minus in every slice rule
    int max_rows = -1;        // restrict every slice to at most this many rows
    int extra_margin = 0;     // widen the slice window on both sides
    int box_budget = -1;      // override the computed budget (testing only)
};

/// Slices [first, last] that can be non-empty, plus the box budget.
struct SliceWindow {
    int first;
    int last;
    int budget;
};

SliceWindow slice_window(const ChamberSpec& spec, int D, const EnumerateOptions& opts = {});

/// Σ_Π ∏ᵢ (q_iᶿ)^{|Π|_i} over configurations of weight degree ≤ D.
TruncatedSeries enumerate_z(const ChamberSpec& spec, int D, const EnumerateOptions& opts = {});
TruncatedSeries enumerate_z_transposed(const ChamberSpec& spec, int D);

/// One configuration: slices[k] is λ(first + k).
struct Configuration {
    int first;
    std::vector<Partition> slices;

    std::vector<int> boxes_per_residue(int L) const;
    int total_boxes() const;
};

/// Exponent vector Σ_r |Π|_r · w_r (may be computed for any configuration).
std::vector<int> configuration_weight(const ChamberSpec& spec, const Configuration& c);

/// Visits every configuration with weight degree ≤ D, depth first.
void for_each_configuration(const ChamberSpec& spec, int D, const EnumerateOptions& opts,
                            const std::function<void(const Configuration&)>& visit);

/// Whether consecutive slices satisfy the chamber's rules.
bool satisfies_rules(const ChamberSpec& spec, const Configuration& c, bool transposed = false);

} // namespace crystal
