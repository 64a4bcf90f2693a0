#include "mcsp/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mcsp {

std::vector<GreedyExtraction> greedy_extractions(std::string_view x, std::string_view y) {
    if (!related(x, y)) {
        throw std::invalid_argument("greedy: unrelated strings");
    }
    const int n = static_cast<int>(x.size());
    std::vector<std::uint8_t> marked_x(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> marked_y(static_cast<std::size_t>(n), 0);

    // run[i][p]: length of the common substring at (i, p) confined to the
    // unmarked runs; recomputed per step, O(n^2) each.
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    std::vector<int> run(stride * stride);

    std::vector<GreedyExtraction> steps;
    int remaining = n;
    while (remaining > 0) {
        std::fill(run.begin(), run.end(), 0);
        int best = 0;
        int best_i = -1;
        int best_p = -1;
        for (int i = n - 1; i >= 0; --i) {
            for (int p = n - 1; p >= 0; --p) {
                int& cell = run[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(p)];
                if (!marked_x[static_cast<std::size_t>(i)] && !marked_y[static_cast<std::size_t>(p)] &&
                    x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(p)]) {
                    cell = 1 + run[(static_cast<std::size_t>(i) + 1) * stride +
                                   static_cast<std::size_t>(p) + 1];
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int p = 0; p < n; ++p) {
                const int len = run[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(p)];
                if (len > best) {
                    best = len;
                    best_i = i;
                    best_p = p;
                }
            }
        }
        if (best == 0) {
            throw std::logic_error("greedy: no common substring among unmarked positions");
        }
        std::fill(marked_x.begin() + best_i, marked_x.begin() + best_i + best, std::uint8_t{1});
        std::fill(marked_y.begin() + best_p, marked_y.begin() + best_p + best, std::uint8_t{1});
        steps.push_back(GreedyExtraction{Block{kIdX, best_i, best_i + best - 1},
                                         Block{kIdY, best_p, best_p + best - 1}});
        remaining -= best;
    }
    return steps;
}

CommonPartition greedy_mcsp(std::string_view x, std::string_view y) {
    auto steps = greedy_extractions(x, y);
    std::sort(steps.begin(), steps.end(), [](const GreedyExtraction& a, const GreedyExtraction& b) {
        return a.from_x.first < b.from_x.first;
    });
    CommonPartition cp;
    cp.partition.reserve(steps.size());
    cp.mapped.reserve(steps.size());
    for (const GreedyExtraction& s : steps) {
        cp.partition.push_back(s.from_x);
        cp.mapped.push_back(s.from_y);
    }
    return cp;
}

}  // namespace mcsp
