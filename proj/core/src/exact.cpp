#include "mcsp/exact.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace mcsp {

namespace {

// States are subsets of consumed Y positions. X is always consumed as a
// prefix, so popcount(mask) doubles as the next X position.
class Search {
  public:
    Search(std::string_view x, std::string_view y)
        : x_(x), y_(y), n_(static_cast<int>(x.size())), full_((std::uint32_t{1} << n_) - 1) {}

    int cost(std::uint32_t mask) {
        if (mask == full_) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

        const int i = std::popcount(mask);
        int best = n_ + 1;
        // Longest blocks first; the first level that completes cheaply
        // shrinks the subtree for the rest.
        for (int len = n_ - i; len >= 1 && best > 1; --len) {
            for (int p = 0; p + len <= n_; ++p) {
                const std::uint32_t bits = ((std::uint32_t{1} << len) - 1) << p;
                if ((mask & bits) != 0) continue;
                if (y_.compare(static_cast<std::size_t>(p), static_cast<std::size_t>(len), x_,
                               static_cast<std::size_t>(i), static_cast<std::size_t>(len)) != 0) {
                    continue;
                }
                best = std::min(best, 1 + cost(mask | bits));
            }
        }
        memo_.emplace(mask, best);
        return best;
    }

    CommonPartition witness() {
        CommonPartition cp;
        std::uint32_t mask = 0;
        while (mask != full_) {
            const int i = std::popcount(mask);
            const int target = cost(mask);
            bool advanced = false;
            for (int len = n_ - i; len >= 1 && !advanced; --len) {
                for (int p = 0; p + len <= n_; ++p) {
                    const std::uint32_t bits = ((std::uint32_t{1} << len) - 1) << p;
                    if ((mask & bits) != 0) continue;
                    if (y_.compare(static_cast<std::size_t>(p), static_cast<std::size_t>(len), x_,
                                   static_cast<std::size_t>(i),
                                   static_cast<std::size_t>(len)) != 0) {
                        continue;
                    }
                    if (1 + cost(mask | bits) == target) {
                        cp.partition.push_back(Block{kIdX, i, i + len - 1});
                        cp.mapped.push_back(Block{kIdY, p, p + len - 1});
                        mask |= bits;
                        advanced = true;
                        break;
                    }
                }
            }
            if (!advanced) {
                throw std::logic_error("exact: witness reconstruction lost the optimum");
            }
        }
        return cp;
    }

  private:
    std::string_view x_;
    std::string_view y_;
    int n_;
    std::uint32_t full_;
    std::unordered_map<std::uint32_t, int> memo_;
};

}  // namespace

ExactResult exact_mcsp(std::string_view x, std::string_view y) {
    if (!related(x, y)) {
        throw std::invalid_argument("exact: unrelated strings");
    }
    if (static_cast<int>(x.size()) > kExactLengthLimit) {
        throw std::invalid_argument("exact: input too large for exact search (limit " +
                                    std::to_string(kExactLengthLimit) + ")");
    }
    if (x.empty()) return ExactResult{0, {}};

    Search search(x, y);
    ExactResult result;
    result.cost = search.cost(0);
    result.witness = search.witness();
    return result;
}

}  // namespace mcsp
