#pragma once

#include "mcsp/block.hpp"

#include <string_view>
#include <vector>

namespace mcsp {

/// One greedy step: a block of X matched against a block of Y of equal text.
struct GreedyExtraction {
    Block from_x;
    Block from_y;

    friend bool operator==(const GreedyExtraction&, const GreedyExtraction&) = default;
};

/// Runs the greedy baseline and returns the extractions in the order they
/// were taken. Each step removes a longest substring common to a contiguous
/// unmarked region of X and one of Y; ties prefer the smallest X start, then
/// the smallest Y start. Throws std::invalid_argument on unrelated inputs.
std::vector<GreedyExtraction> greedy_extractions(std::string_view x, std::string_view y);

/// The greedy extractions repackaged as a partition, pairs sorted by X start.
CommonPartition greedy_mcsp(std::string_view x, std::string_view y);

}  // namespace mcsp
