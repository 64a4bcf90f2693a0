#pragma once

#include "mcsp/block.hpp"

#include <string_view>

namespace mcsp {

/// Largest input length exact_mcsp accepts; the search memoizes one entry
/// per subset of Y positions.
inline constexpr int kExactLengthLimit = 14;

struct ExactResult {
    int cost = 0;
    CommonPartition witness;
};

/// Minimum common partition size by exhaustive search, with one optimal
/// witness. Throws std::invalid_argument on unrelated inputs and on strings
/// longer than kExactLengthLimit ("too large for exact").
ExactResult exact_mcsp(std::string_view x, std::string_view y);

}  // namespace mcsp
