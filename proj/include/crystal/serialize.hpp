#pragma once

#include <string>

#include <json.hpp>

#include "crystal/chamber.hpp"
#include "crystal/lgv.hpp"
#include "crystal/partition.hpp"
#include "crystal/series.hpp"

namespace crystal {

using json = nlohmann::ordered_json;

/// {"vars":["q0",…],"cutoff":D,"terms":[{"exp":[…],"coef":"<decimal>"}]},
/// terms sorted lexicographically by exponent vector.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

/// One row per monomial: exp_0 … exp_{L−1} coefficient, with a header row.
std::string series_to_tsv(const TruncatedSeries& s);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"L":2,"rho":[1,-1],"theta":[-1,5]}, θ images doubled.
json chamber_to_json(const ChamberSpec& spec);
ChamberSpec chamber_from_json(const json& j);

/// Adjacency-list export for debugging.
json dag_to_json(const WeightedDag& g);

} // namespace crystal
