#pragma once

#include "mcsp/block.hpp"
#include "mcsp/csgraph.hpp"

namespace mcsp {

// Mixing weights for the combined edge desirability.
struct HeuristicWeights {
    double a = 1.0;  // static term (relative length)
    double b = 1.0;  // dynamic term (span tightness)
};

// Relative length of the edge block: length / longest edge in the graph.
// In (0, 1]; independent of construction state.
double static_heuristic(const CommonSubstringGraph& g, const Block& b);

// 1 / (|length - minSpan| + 1) over the free matches of b. Equals 1 when
// some free match sits in a slot of exactly the block's size. Throws
// std::invalid_argument when b has no free match.
double dynamic_heuristic(const CommonSubstringGraph& g, const OccupancyState& occ,
                         const Block& b);

// a * static + b * dynamic.
double combined_heuristic(const CommonSubstringGraph& g, const OccupancyState& occ,
                          const Block& b, const HeuristicWeights& w = {});

}  // namespace mcsp
