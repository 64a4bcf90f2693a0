#include "mcsp/heuristics.hpp"

#include <cmath>
#include <stdexcept>

namespace mcsp {

double static_heuristic(const CommonSubstringGraph& g, const Block& b) {
    if (!g.is_edge(b)) {
        throw std::invalid_argument("static_heuristic: not an edge block: " + to_string(b));
    }
    return static_cast<double>(b.length()) / static_cast<double>(g.max_edge_length());
}

double dynamic_heuristic(const CommonSubstringGraph& g, const OccupancyState& occ,
                         const Block& b) {
    const int span = min_span(g, occ, b);
    return 1.0 / (std::abs(b.length() - span) + 1.0);
}

double combined_heuristic(const CommonSubstringGraph& g, const OccupancyState& occ,
                          const Block& b, const HeuristicWeights& w) {
    // Zero-weight terms are not evaluated; the dynamic term costs a span scan.
    double value = 0.0;
    if (w.a != 0.0) value += w.a * static_heuristic(g, b);
    if (w.b != 0.0) value += w.b * dynamic_heuristic(g, occ, b);
    return value;
}

}  // namespace mcsp
