#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mcsp/stats.hpp"

using namespace mcsp;

TEST_CASE("regularized incomplete beta matches closed forms") {
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(regularized_incomplete_beta(2.0, 1.0, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(regularized_incomplete_beta(1.0, 2.0, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(regularized_incomplete_beta(3.0, 2.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(3.0, 2.0, 1.0) == 1.0);
    CHECK(regularized_incomplete_beta(3.0, 2.0, -0.5) == 0.0);
    CHECK(regularized_incomplete_beta(3.0, 2.0, 1.5) == 1.0);

    SUBCASE("symmetry") {
        const double lhs = regularized_incomplete_beta(2.5, 4.0, 0.37);
        const double rhs = 1.0 - regularized_incomplete_beta(4.0, 2.5, 0.63);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
    SUBCASE("monotone in x") {
        double prev = 0.0;
        for (double x = 0.05; x < 1.0; x += 0.05) {
            const double cur = regularized_incomplete_beta(3.0, 5.0, x);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
    SUBCASE("shape parameters must be positive") {
        CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -2.0, 0.5), std::invalid_argument);
    }
}

TEST_CASE("two-sided t-distribution p-values match an independent implementation") {
    CHECK(student_t_two_sided_p(2.0, 28) == doctest::Approx(5.528523764196e-02).epsilon(1e-8));
    CHECK(student_t_two_sided_p(1.0, 28) == doctest::Approx(3.258747068717e-01).epsilon(1e-8));
    CHECK(student_t_two_sided_p(0.5, 10) == doctest::Approx(6.278936057430e-01).epsilon(1e-8));
    CHECK(student_t_two_sided_p(3.5, 4) == doctest::Approx(2.489616346022e-02).epsilon(1e-8));
    CHECK(student_t_two_sided_p(2.1026, 28) == doctest::Approx(4.461723192570e-02).epsilon(1e-8));
    CHECK(student_t_two_sided_p(34.4849, 28) == doctest::Approx(1.755096985654e-24).epsilon(1e-6));
    CHECK(student_t_two_sided_p(0.0, 28) == 1.0);

    SUBCASE("sign of t does not matter") {
        CHECK(student_t_two_sided_p(-2.0, 28) ==
              doctest::Approx(student_t_two_sided_p(2.0, 28)).epsilon(1e-12));
    }
    SUBCASE("infinite t pins p to zero") {
        CHECK(student_t_two_sided_p(std::numeric_limits<double>::infinity(), 5) == 0.0);
        CHECK(student_t_two_sided_p(-std::numeric_limits<double>::infinity(), 5) == 0.0);
    }
    SUBCASE("contract violations") {
        CHECK_THROWS_AS(student_t_two_sided_p(1.0, 0), std::invalid_argument);
        CHECK_THROWS_AS(student_t_two_sided_p(std::nan(""), 5), std::invalid_argument);
    }
}

TEST_CASE("t test from summary statistics reproduces published rows") {
    SUBCASE("baseline 46") {
        const TTestResult r = t_test_summary(46.0, 42.8667, 0.3519, 15);
        CHECK(r.t > 34.48);
        CHECK(r.t < 34.50);
        CHECK(r.t == doctest::Approx(34.484850).epsilon(1e-6));
        CHECK(r.p == doctest::Approx(1.755167e-24).epsilon(1e-5));
        CHECK(r.mark == Mark::better);
    }
    SUBCASE("baseline 56") {
        const TTestResult r = t_test_summary(56.0, 51.8667, 0.5164, 15);
        CHECK(r.t > 30.99);
        CHECK(r.t < 31.01);
        CHECK(r.mark == Mark::better);
    }
    SUBCASE("significance threshold is configurable") {
        const TTestResult r = t_test_summary(46.0, 42.8667, 0.3519, 15, 1e-30);
        CHECK(r.mark == Mark::similar);
    }
    SUBCASE("contract violations") {
        CHECK_THROWS_AS(t_test_summary(46.0, 42.0, 0.1, 1), std::invalid_argument);
        CHECK_THROWS_AS(t_test_summary(46.0, 42.0, -0.1, 15), std::invalid_argument);
    }
}

TEST_CASE("t test on raw costs") {
    SUBCASE("worked example") {
        const std::vector<int> costs{41, 42, 43, 42, 42};
        // mean 42, s = sqrt(2)/2, t = 4 * sqrt(5) / (sqrt(2)/2) = 4 * sqrt(10)
        const TTestResult r = t_test(46.0, costs);
        CHECK(r.mean == doctest::Approx(42.0));
        CHECK(r.stddev == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
        CHECK(r.n == 5);
        CHECK(r.t == doctest::Approx(4.0 * std::sqrt(10.0)).epsilon(1e-12));
        CHECK(r.p == doctest::Approx(student_t_two_sided_p(r.t, 8)).epsilon(1e-12));
        CHECK(r.mark == Mark::better);
    }
    SUBCASE("sample above the baseline is marked worse") {
        const std::vector<int> costs{50, 51, 49, 50, 50, 51, 49, 50};
        const TTestResult r = t_test(46.0, costs);
        CHECK(r.t < 0.0);
        CHECK(r.mark == Mark::worse);
    }
    SUBCASE("sample identical to baseline") {
        const std::vector<int> costs{46, 46, 46};
        const TTestResult r = t_test(46.0, costs);
        CHECK(r.t == 0.0);
        CHECK(r.p == 1.0);
        CHECK(r.mark == Mark::similar);
    }
    SUBCASE("zero variance away from the baseline") {
        const std::vector<int> low{40, 40, 40};
        const TTestResult better = t_test(46.0, low);
        CHECK(std::isinf(better.t));
        CHECK(better.t > 0.0);
        CHECK(better.p == 0.0);
        CHECK(better.mark == Mark::better);

        const std::vector<int> high{50, 50};
        const TTestResult worse = t_test(46.0, high);
        CHECK(std::isinf(worse.t));
        CHECK(worse.t < 0.0);
        CHECK(worse.mark == Mark::worse);
    }
    SUBCASE("nonzero variance, insignificant difference") {
        const std::vector<int> costs{45, 46, 47};
        const TTestResult r = t_test(46.0, costs);
        CHECK(r.t == 0.0);
        CHECK(r.mark == Mark::similar);
    }
    SUBCASE("needs at least two observations") {
        const std::vector<int> one{42};
        CHECK_THROWS_AS(t_test(46.0, one), std::invalid_argument);
        CHECK_THROWS_AS(t_test(46.0, {}), std::invalid_argument);
    }
}

TEST_CASE("mark strings") {
    CHECK(to_string(Mark::better) == "+");
    CHECK(to_string(Mark::worse) == "-");
    CHECK(to_string(Mark::similar) == "≈");
}

TEST_CASE("tuning rank") {
    SUBCASE("single instance") {
        const std::vector<std::vector<double>> costs{{10.0, 20.0}};
        const auto ranked = tuning_rank(costs);
        REQUIRE(ranked.size() == 2);
        CHECK(ranked[0].index == 0);
        CHECK(ranked[0].rank == doctest::Approx(0.5));
        CHECK(ranked[1].index == 1);
        CHECK(ranked[1].rank == doctest::Approx(1.0));
    }
    SUBCASE("rows are normalized before summing") {
        // Column 0 wins on the first row, column 1 on the second; totals tie at 1.5
        // and the tie keeps column order.
        const std::vector<std::vector<double>> costs{{10.0, 20.0}, {30.0, 15.0}};
        const auto ranked = tuning_rank(costs);
        REQUIRE(ranked.size() == 2);
        CHECK(ranked[0].index == 0);
        CHECK(ranked[0].rank == doctest::Approx(1.5));
        CHECK(ranked[1].index == 1);
        CHECK(ranked[1].rank == doctest::Approx(1.5));
    }
    SUBCASE("best setting wins regardless of scale") {
        // Column 2 is best on every row even though row magnitudes differ wildly.
        const std::vector<std::vector<double>> costs{
            {100.0, 120.0, 90.0},
            {10.0, 12.0, 9.0},
            {1000.0, 1100.0, 950.0},
        };
        const auto ranked = tuning_rank(costs);
        CHECK(ranked[0].index == 2);
    }
    SUBCASE("contract violations") {
        CHECK_THROWS_AS(tuning_rank({}), std::invalid_argument);
        CHECK_THROWS_AS(tuning_rank({{}}), std::invalid_argument);
        CHECK_THROWS_AS(tuning_rank({{1.0, 2.0}, {1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(tuning_rank({{0.0, 0.0}}), std::invalid_argument);
        CHECK_THROWS_AS(tuning_rank({{1.0, -2.0}}), std::invalid_argument);
    }
}
