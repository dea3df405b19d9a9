#include "cyclelab/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace cyclelab {

NormalizedSequence normalize(const std::vector<double>& values, double step,
                             bool exclude_zero_inputs, std::string source) {
    if (step <= 0.0) throw std::domain_error("subdivision step must be positive");
    NormalizedSequence out;
    out.source = std::move(source);
    out.gammas.reserve(values.size());
    for (double v : values) {
        if (v < 0.0) throw std::domain_error("negative value in sequence");
        if (exclude_zero_inputs && v == 0.0) {
            ++out.excluded_zeros;
            continue;
        }
        double g = v / step;
        g -= std::floor(g);
        out.gammas.push_back(g);
    }
    return out;
}

WeylCurve weyl_curve(const NormalizedSequence& seq, int m) {
    if (seq.gammas.empty()) throw std::domain_error("empty sequence");
    if (m == 0) throw std::domain_error("frequency m must be nonzero");
    std::vector<double> g = seq.gammas;
    std::sort(g.begin(), g.end());
    WeylCurve curve;
    curve.m = m;
    curve.moduli.reserve(g.size());
    std::complex<double> sum{0.0, 0.0};
    const double two_pi_m = 2.0 * M_PI * m;
    for (std::size_t k = 0; k < g.size(); ++k) {
        sum += std::polar(1.0, two_pi_m * g[k]);
        curve.moduli.push_back(std::abs(sum) / static_cast<double>(k + 1));
    }
    return curve;
}

PhaseConstants phase_constants() {
    const double c1 = std::cos(1.0);
    const double j = std::asin(c1);
    return {j, std::sqrt(c1 - j * j), 1.0 / std::exp(1.0)};
}

RiemannReport riemann_estimate(const NormalizedSequence& seq, const std::string& function_id,
                               double a) {
    if (seq.gammas.empty()) throw std::domain_error("empty sequence");
    const PhaseConstants pc = phase_constants();
    RiemannReport rep;
    rep.function_id = function_id;

    double (*f)(double) = nullptr;
    if (function_id == "x") {
        f = [](double t) { return t; };
        rep.target = 0.5;
    } else if (function_id == "x2") {
        f = [](double t) { return t * t; };
        rep.target = 1.0 / 3.0;
    } else if (function_id == "x3") {
        f = [](double t) { return t * t * t; };
        rep.target = 1.0 / 4.0;
    } else if (function_id == "x4") {
        f = [](double t) { return t * t * t * t; };
        rep.target = 1.0 / 5.0;
    } else if (function_id == "sqrt") {
        f = [](double t) { return std::sqrt(t); };
        rep.target = 2.0 / 3.0;
    } else if (function_id == "fourthroot") {
        f = [](double t) { return std::pow(t, 0.25); };
        rep.target = 4.0 / 5.0;
    } else if (function_id == "log") {
        f = [](double t) { return std::log(t); };
        rep.target = -1.0;
    } else if (function_id == "exp") {
        f = [](double t) { return std::exp(t); };
        rep.target = std::exp(1.0);
        rep.shift = pc.k;
    } else if (function_id == "sin") {
        f = [](double t) { return std::sin(t); };
        rep.target = std::sin(1.0);
        rep.shift = pc.j;
    } else if (function_id == "cos") {
        f = [](double t) { return std::cos(t); };
        rep.target = std::cos(1.0);
        rep.shift = pc.k;
    } else if (function_id == "tan") {
        f = [](double t) { return std::tan(t); };
        rep.target = std::tan(1.0);
        rep.shift = pc.tan_shift;
    } else if (function_id == "cauchy") {
        rep.function_id = "cauchy(" + std::to_string(static_cast<int>(a)) + ")";
        rep.target = (1.0 / a) * std::atan(1.0 / a);
    } else {
        throw std::domain_error("unknown function id: " + function_id);
    }

    double sum = 0.0;
    std::size_t count = 0;
    const bool is_log = function_id == "log";
    const bool is_cauchy = function_id == "cauchy";
    for (double g : seq.gammas) {
        if (is_log && g <= 0.0) {
            ++rep.excluded;
            continue;
        }
        sum += is_cauchy ? 1.0 / (a * a + g * g) : f(g + rep.shift);
        ++count;
    }
    if (count == 0) throw std::domain_error("no usable values for " + function_id);
    rep.estimate = sum / static_cast<double>(count);
    return rep;
}

std::vector<RiemannReport> riemann_battery(const NormalizedSequence& seq) {
    std::vector<RiemannReport> out;
    for (const char* id : {"x", "x2", "x3", "x4", "sqrt", "fourthroot", "log", "exp", "sin",
                           "cos", "tan"}) {
        out.push_back(riemann_estimate(seq, id));
    }
    out.push_back(riemann_estimate(seq, "cauchy", 2.0));
    out.push_back(riemann_estimate(seq, "cauchy", 3.0));
    return out;
}

}  // namespace cyclelab
