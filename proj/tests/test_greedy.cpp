#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcsp/greedy.hpp"
#include "mcsp/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace mcsp;

namespace {

std::string random_related_pair(int n, Rng& rng, std::string* y_out) {
    std::string x;
    for (int i = 0; i < n; ++i) x.push_back("abcd"[rng.below(4)]);
    std::vector<char> chars(x.begin(), x.end());
    rng.shuffle(chars);
    y_out->assign(chars.begin(), chars.end());
    return x;
}

// Longest common substring over unmarked positions, by direct scan.
int reference_best_length(const std::string& x, const std::string& y,
                          const std::vector<bool>& marked_x, const std::vector<bool>& marked_y) {
    const int n = static_cast<int>(x.size());
    int best = 0;
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < n; ++p) {
            int len = 0;
            while (i + len < n && p + len < n && !marked_x[static_cast<std::size_t>(i + len)] &&
                   !marked_y[static_cast<std::size_t>(p + len)] &&
                   x[static_cast<std::size_t>(i + len)] == y[static_cast<std::size_t>(p + len)]) {
                ++len;
            }
            best = std::max(best, len);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("identity input collapses to one block") {
    const auto cp = greedy_mcsp("abcd", "abcd");
    CHECK(cp.size() == 1);
    CHECK(cp.partition == std::vector<Block>{Block{kIdX, 0, 3}});
    CHECK(cp.mapped == std::vector<Block>{Block{kIdY, 0, 3}});
    CHECK(bool(validate_common_partition(cp, "abcd", "abcd")));
}

TEST_CASE("ababcab/abcabab extraction trace") {
    const auto steps = greedy_extractions("ababcab", "abcabab");
    REQUIRE(steps.size() == 2);
    CHECK(steps[0] == GreedyExtraction{Block{kIdX, 2, 6}, Block{kIdY, 0, 4}});
    CHECK(steps[1] == GreedyExtraction{Block{kIdX, 0, 1}, Block{kIdY, 5, 6}});

    const auto cp = greedy_mcsp("ababcab", "abcabab");
    CHECK(cp.size() == 2);
    CHECK(cp.partition == std::vector<Block>{{Block{kIdX, 0, 1}, Block{kIdX, 2, 6}}});
    CHECK(cp.mapped == std::vector<Block>{{Block{kIdY, 5, 6}, Block{kIdY, 0, 4}}});
    CHECK(bool(validate_common_partition(cp, "ababcab", "abcabab")));
}

TEST_CASE("bceabcd/abcdbec extraction trace") {
    const auto steps = greedy_extractions("bceabcd", "abcdbec");
    REQUIRE(steps.size() == 4);
    CHECK(steps[0] == GreedyExtraction{Block{kIdX, 3, 6}, Block{kIdY, 0, 3}});
    CHECK(steps[1] == GreedyExtraction{Block{kIdX, 0, 0}, Block{kIdY, 4, 4}});
    CHECK(steps[2] == GreedyExtraction{Block{kIdX, 1, 1}, Block{kIdY, 6, 6}});
    CHECK(steps[3] == GreedyExtraction{Block{kIdX, 2, 2}, Block{kIdY, 5, 5}});

    const auto cp = greedy_mcsp("bceabcd", "abcdbec");
    CHECK(cp.size() == 4);
    CHECK(bool(validate_common_partition(cp, "bceabcd", "abcdbec")));
}

TEST_CASE("unrelated inputs throw") {
    CHECK_THROWS_AS(greedy_mcsp("aab", "abb"), std::invalid_argument);
    CHECK_THROWS_AS(greedy_extractions("ab", "abc"), std::invalid_argument);
}

TEST_CASE("empty input yields an empty partition") {
    CHECK(greedy_extractions("", "").empty());
    CHECK(greedy_mcsp("", "").size() == 0);
}

TEST_CASE("every extraction is maximal and the output is a valid partition") {
    Rng rng(987654321);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        std::string y;
        const std::string x = random_related_pair(n, rng, &y);
        CAPTURE(x);
        CAPTURE(y);

        const auto steps = greedy_extractions(x, y);
        std::vector<bool> marked_x(static_cast<std::size_t>(n), false);
        std::vector<bool> marked_y(static_cast<std::size_t>(n), false);
        for (const auto& s : steps) {
            REQUIRE(s.from_x.length() == s.from_y.length());
            REQUIRE(s.from_x.length() == reference_best_length(x, y, marked_x, marked_y));
            for (int i = s.from_x.first; i <= s.from_x.last; ++i) {
                REQUIRE_FALSE(marked_x[static_cast<std::size_t>(i)]);
                marked_x[static_cast<std::size_t>(i)] = true;
            }
            for (int p = s.from_y.first; p <= s.from_y.last; ++p) {
                REQUIRE_FALSE(marked_y[static_cast<std::size_t>(p)]);
                marked_y[static_cast<std::size_t>(p)] = true;
            }
        }

        const auto cp = greedy_mcsp(x, y);
        REQUIRE(bool(validate_common_partition(cp, x, y)));
        CHECK(cp.size() == steps.size());
        CHECK(cp.size() <= static_cast<std::size_t>(n));
    }
}
