#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace cyclelab {

/// Ordinary least-squares polynomial fit. Coefficients are ordered
/// highest-degree-first (p1, p2, ...) with 95% confidence intervals from the
/// Student-t quantile at N-(degree+1) degrees of freedom.
struct FitResult {
    int degree = 0;
    std::vector<double> coefficients;
    std::vector<std::pair<double, double>> ci95;
    double sse = 0.0;
    double r2 = 0.0;
    double rmse = 0.0;
};

FitResult polyfit(const std::vector<double>& xs, const std::vector<double>& ys, int degree);

struct NormalFit {
    double mean = 0.0;
    std::pair<double, double> mean_ci95{0.0, 0.0};
    double stddev = 0.0;
    std::pair<double, double> std_ci95{0.0, 0.0};
    std::size_t count = 0;
    bool degenerate = false;  // all samples equal; std CI undefined
};

/// Sample mean/std with t and chi-square 95% intervals. Requires >= 8 samples.
NormalFit normal_fit(const std::vector<double>& samples);

/// Inverse standard normal CDF, |error| <= 1e-8.
double probit(double p);
/// General inverse normal CDF mu + sigma * probit(p).
double probit(double p, double mu, double sigma);

struct Histogram {
    std::vector<double> edges;        // ascending, counts.size() + 1 entries
    std::vector<std::size_t> counts;  // left-closed right-open bins, last bin closed
};

struct FreedmanDiaconis {};
struct FixedWidth {
    double width;
};
using BinRule = std::variant<FreedmanDiaconis, FixedWidth>;

Histogram histogram(const std::vector<double>& samples, const BinRule& rule);

}  // namespace cyclelab
