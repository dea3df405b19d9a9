#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclelab/numerics.hpp"
#include "cyclelab/sieve.hpp"

namespace cyclelab {

using Signature = std::vector<int>;

/// Dirichlet convolution with the Moebius function:
/// c[m] = sum_{d | m} mu(d) * a[m/d], with a 1-indexed (a[1] is a.front()).
std::vector<double> dirichlet_convolve(const std::vector<double>& a, const MoebiusSieve& sieve);

/// Factorization signature of m (sorted exponent multiset).
Signature classify(std::size_t m, const MoebiusSieve& sieve);

struct ConvolutionCurve {
    Signature signature;
    std::vector<std::pair<std::size_t, double>> points;  // (index m, value), ascending m
};

/// Convolution values grouped by factorization signature; index 1 is excluded.
/// Curves ordered by first occurrence of the signature.
std::vector<ConvolutionCurve> curves(const std::vector<double>& a, const MoebiusSieve& sieve);

struct DifferenceAnalysis {
    Signature signature;
    std::vector<double> samples;
    NormalFit fit;
    Histogram hist;
    std::vector<std::pair<double, double>> probit_overlay;  // (p, fitted quantile)
};

/// Convolve the adjacent differences b[k] = a[k+1] - a[k] with mu and fit a
/// normal distribution to the values on the given curve. Requires enough
/// samples on the curve (>= 8).
DifferenceAnalysis difference_analysis(const std::vector<double>& a, const MoebiusSieve& sieve,
                                       const Signature& signature);

}  // namespace cyclelab
