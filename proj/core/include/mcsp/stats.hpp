#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mcsp {

// I_x(a, b), computed with a Lentz continued fraction to about 1e-10.
// Requires a > 0, b > 0; x outside [0, 1] clamps to the nearest endpoint.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of a t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, int df);

enum class Mark {
    better,   // sample mean significantly below the baseline
    worse,    // significantly above
    similar,  // no significant difference
};

std::string_view to_string(Mark mark);

struct TTestResult {
    double t = 0.0;
    double p = 1.0;
    Mark mark = Mark::similar;
    double mean = 0.0;
    double stddev = 0.0;
    int n = 0;
};

// One-sample t test of `costs` against a fixed baseline, t = (baseline - mean) * sqrt(n) / s
// with 2n - 2 degrees of freedom, so positive t means the sample beats the baseline.
// Requires n >= 2. A zero-variance sample short-circuits: t is 0 when the means agree
// and +-infinity (p = 0) otherwise.
TTestResult t_test(double baseline, std::span<const int> costs, double significance = 0.05);

// Same test carried out from published summary statistics instead of raw costs.
TTestResult t_test_summary(double baseline, double mean, double stddev, int n,
                           double significance = 0.05);

struct RankedSetting {
    std::size_t index = 0;  // column in the cost matrix
    double rank = 0.0;
};

// Ranks parameter settings (columns) across instances (rows): each row is divided by
// its maximum, columns are summed, and settings are returned best (lowest) first.
// Ties keep column order. Requires a rectangular matrix of positive costs.
std::vector<RankedSetting> tuning_rank(const std::vector<std::vector<double>>& costs);

}  // namespace mcsp
