#include "mcsp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace mcsp {

namespace {

// Continued fraction for the incomplete beta, evaluated with modified Lentz.
// Converges quickly only for x < (a + 1) / (a + b + 2); the caller flips
// to the symmetric form otherwise.
double beta_continued_fraction(double a, double b, double x) {
    constexpr double kTiny = 1e-30;
    constexpr double kEps = 1e-12;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 400; ++m) {
        const double m2 = 2.0 * m;
        double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        d = 1.0 / d;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        h *= d * c;
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        d = 1.0 / d;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete beta did not converge");
}

Mark classify(double t, double p, double significance) {
    if (p < significance) return t > 0.0 ? Mark::better : Mark::worse;
    return Mark::similar;
}

TTestResult finish_test(double baseline, double mean, double stddev, int n,
                        double significance) {
    TTestResult r;
    r.mean = mean;
    r.stddev = stddev;
    r.n = n;
    const double diff = baseline - mean;
    if (stddev == 0.0) {
        if (diff == 0.0) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = std::copysign(std::numeric_limits<double>::infinity(), diff);
            r.p = 0.0;
        }
    } else {
        r.t = diff * std::sqrt(static_cast<double>(n)) / stddev;
        r.p = student_t_two_sided_p(r.t, 2 * n - 2);
    }
    r.mark = classify(r.t, r.p, significance);
    return r;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("incomplete beta requires positive shape parameters");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    // exp(a ln x + b ln(1-x) - ln B(a, b)); shared by both symmetric branches.
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, int df) {
    if (df < 1) throw std::invalid_argument("t distribution requires df >= 1");
    if (std::isnan(t)) throw std::invalid_argument("t statistic is NaN");
    if (std::isinf(t)) return 0.0;
    const double v = static_cast<double>(df);
    return regularized_incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
}

std::string_view to_string(Mark mark) {
    switch (mark) {
        case Mark::better: return "+";
        case Mark::worse: return "-";
        case Mark::similar: return "≈";
    }
    std::abort();
}

TTestResult t_test(double baseline, std::span<const int> costs, double significance) {
    const int n = static_cast<int>(costs.size());
    if (n < 2) throw std::invalid_argument("t test requires at least two observations");
    double mean = 0.0;
    for (int c : costs) mean += c;
    mean /= n;
    double ss = 0.0;
    for (int c : costs) {
        const double d = c - mean;
        ss += d * d;
    }
    const double stddev = std::sqrt(ss / (n - 1));
    return finish_test(baseline, mean, stddev, n, significance);
}

TTestResult t_test_summary(double baseline, double mean, double stddev, int n,
                           double significance) {
    if (n < 2) throw std::invalid_argument("t test requires at least two observations");
    if (stddev < 0.0) throw std::invalid_argument("negative standard deviation");
    return finish_test(baseline, mean, stddev, n, significance);
}

std::vector<RankedSetting> tuning_rank(const std::vector<std::vector<double>>& costs) {
    if (costs.empty() || costs.front().empty()) {
        throw std::invalid_argument("tuning rank requires a non-empty cost matrix");
    }
    const std::size_t cols = costs.front().size();
    std::vector<double> rank(cols, 0.0);
    for (const auto& row : costs) {
        if (row.size() != cols) {
            throw std::invalid_argument("tuning rank requires a rectangular cost matrix");
        }
        const double row_max = *std::max_element(row.begin(), row.end());
        for (double v : row) {
            if (!(v > 0.0)) throw std::invalid_argument("tuning rank requires positive costs");
        }
        for (std::size_t j = 0; j < cols; ++j) rank[j] += row[j] / row_max;
    }
    std::vector<RankedSetting> out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = {j, rank[j]};
    std::stable_sort(out.begin(), out.end(),
                     [](const RankedSetting& a, const RankedSetting& b) { return a.rank < b.rank; });
    return out;
}

}  // namespace mcsp
