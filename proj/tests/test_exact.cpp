#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcsp/exact.hpp"
#include "mcsp/greedy.hpp"
#include "mcsp/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace mcsp;

namespace {

std::string random_related_pair(int n, Rng& rng, std::string* y_out) {
    std::string x;
    for (int i = 0; i < n; ++i) x.push_back("abc"[rng.below(3)]);
    std::vector<char> chars(x.begin(), x.end());
    rng.shuffle(chars);
    y_out->assign(chars.begin(), chars.end());
    return x;
}

// Reference optimum built the other way round: enumerate the 2^(n-1)
// compositions of X, then try to tile Y with the pieces by backtracking.
bool pieces_tile(const std::vector<std::string>& pieces, std::size_t k, const std::string& y,
                 std::vector<bool>& used) {
    if (k == pieces.size()) return std::find(used.begin(), used.end(), false) == used.end();
    const std::string& piece = pieces[k];
    const int n = static_cast<int>(y.size());
    const int len = static_cast<int>(piece.size());
    for (int p = 0; p + len <= n; ++p) {
        bool free = true;
        for (int q = p; q < p + len; ++q) free = free && !used[static_cast<std::size_t>(q)];
        if (!free || y.compare(static_cast<std::size_t>(p), static_cast<std::size_t>(len), piece) != 0) {
            continue;
        }
        for (int q = p; q < p + len; ++q) used[static_cast<std::size_t>(q)] = true;
        if (pieces_tile(pieces, k + 1, y, used)) return true;
        for (int q = p; q < p + len; ++q) used[static_cast<std::size_t>(q)] = false;
    }
    return false;
}

int reference_optimum(const std::string& x, const std::string& y) {
    const int n = static_cast<int>(x.size());
    int best = n;
    for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::vector<std::string> pieces;
        int start = 0;
        for (int i = 0; i < n - 1; ++i) {
            if (cuts & (1u << i)) {
                pieces.push_back(x.substr(static_cast<std::size_t>(start),
                                          static_cast<std::size_t>(i + 1 - start)));
                start = i + 1;
            }
        }
        pieces.push_back(x.substr(static_cast<std::size_t>(start)));
        if (static_cast<int>(pieces.size()) >= best) continue;
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        if (pieces_tile(pieces, 0, y, used)) best = static_cast<int>(pieces.size());
    }
    return best;
}

}  // namespace

TEST_CASE("identity optimum is one block") {
    const auto r = exact_mcsp("abcd", "abcd");
    CHECK(r.cost == 1);
    CHECK(r.witness.size() == 1);
    CHECK(bool(validate_common_partition(r.witness, "abcd", "abcd")));
}

TEST_CASE("known optima") {
    CHECK(exact_mcsp("abad", "adab").cost == 2);
    CHECK(exact_mcsp("ababcab", "abcabab").cost == 2);
    CHECK(exact_mcsp("bceabcd", "abcdbec").cost == 4);
}

TEST_CASE("witness attains the reported cost and validates") {
    for (const auto& [x, y] : {std::pair<std::string, std::string>{"abad", "adab"},
                               {"ababcab", "abcabab"},
                               {"bceabcd", "abcdbec"}}) {
        const auto r = exact_mcsp(x, y);
        CHECK(static_cast<int>(r.witness.size()) == r.cost);
        CHECK(bool(validate_common_partition(r.witness, x, y)));
    }
}

TEST_CASE("input contract") {
    CHECK_THROWS_AS(exact_mcsp("aab", "abb"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(exact_mcsp("abcabcabcabcabc", "abcabcabcabcabc"),
                         "exact: input too large for exact search (limit 14)",
                         std::invalid_argument);
    CHECK(exact_mcsp("", "").cost == 0);
}

TEST_CASE("matches an independent composition-enumeration optimum") {
    Rng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        std::string y;
        const std::string x = random_related_pair(n, rng, &y);
        CAPTURE(x);
        CAPTURE(y);
        const auto r = exact_mcsp(x, y);
        REQUIRE(r.cost == reference_optimum(x, y));
        REQUIRE(static_cast<int>(r.witness.size()) == r.cost);
        REQUIRE(bool(validate_common_partition(r.witness, x, y)));
    }
}

TEST_CASE("dominance and symmetry on random instances") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        std::string y;
        const std::string x = random_related_pair(n, rng, &y);
        CAPTURE(x);
        CAPTURE(y);
        const int opt = exact_mcsp(x, y).cost;
        CHECK(opt == exact_mcsp(y, x).cost);
        const auto greedy_cost = greedy_mcsp(x, y).size();
        CHECK(opt <= static_cast<int>(greedy_cost));
        CHECK(greedy_cost <= static_cast<std::size_t>(n));
        CHECK(opt >= 1);
    }
}
