#pragma once

#include <string>
#include <vector>

namespace cyclelab {

inline constexpr double kDefaultStep = 1.4142135623730951;  // sqrt(2)

/// Values reduced to [0,1) by the subdivision z_k = k*step: gamma = frac(x/step).
struct NormalizedSequence {
    std::vector<double> gammas;
    std::string source;
    std::size_t excluded_zeros = 0;
};

/// Reduce non-negative values mod the subdivision. When exclude_zero_inputs is
/// set, input values equal to zero are dropped and counted.
NormalizedSequence normalize(const std::vector<double>& values,
                             double step = kDefaultStep,
                             bool exclude_zero_inputs = false,
                             std::string source = {});

/// Weyl exponential-sum prefix moduli: entry N is |(1/N) sum_{k<=N} e^{2 pi i m gamma_k}|.
/// The gammas are sorted ascending before the prefix pass; the final entry is
/// order-free.
struct WeylCurve {
    int m = 0;
    std::vector<double> moduli;
};

WeylCurve weyl_curve(const NormalizedSequence& seq, int m);

struct RiemannReport {
    std::string function_id;
    double shift = 0.0;
    double estimate = 0.0;
    double target = 0.0;
    std::size_t excluded = 0;  // gamma values dropped (log only)
};

/// Phase shifts: j = arcsin(cos 1) for sin, k = sqrt(cos 1 - j^2) for cos and
/// exp, 1/e for tan.
struct PhaseConstants {
    double j;
    double k;
    double tan_shift;
};

PhaseConstants phase_constants();

/// Riemann-sum estimate (1/N) sum f(gamma + shift) against the printed target.
/// function_id in {x, x2, x3, x4, sqrt, fourthroot, log, exp, sin, cos, tan,
/// cauchy(a)}; `a` applies to cauchy only.
RiemannReport riemann_estimate(const NormalizedSequence& seq, const std::string& function_id,
                               double a = 2.0);

/// The full 13-function battery: x..x4, roots, log, exp, trig, cauchy(2), cauchy(3).
std::vector<RiemannReport> riemann_battery(const NormalizedSequence& seq);

}  // namespace cyclelab
