#include "cyclelab/moebius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclelab {

std::vector<double> dirichlet_convolve(const std::vector<double>& a, const MoebiusSieve& sieve) {
    const std::size_t n = a.size();
    if (n > sieve.limit) throw std::domain_error("sequence longer than sieve range");
    std::vector<double> c(n, 0.0);
    for (std::size_t d = 1; d <= n; ++d) {
        const int mu = sieve.mu[d];
        if (mu == 0) continue;
        for (std::size_t m = d; m <= n; m += d) {
            c[m - 1] += mu * a[m / d - 1];
        }
    }
    return c;
}

Signature classify(std::size_t m, const MoebiusSieve& sieve) { return factor_signature(m, sieve); }

std::vector<ConvolutionCurve> curves(const std::vector<double>& a, const MoebiusSieve& sieve) {
    const std::vector<double> c = dirichlet_convolve(a, sieve);
    std::vector<ConvolutionCurve> out;
    std::map<Signature, std::size_t> index;
    for (std::size_t m = 2; m <= a.size(); ++m) {
        Signature sig = classify(m, sieve);
        auto [it, inserted] = index.try_emplace(sig, out.size());
        if (inserted) out.push_back({sig, {}});
        out[it->second].points.emplace_back(m, c[m - 1]);
    }
    return out;
}

DifferenceAnalysis difference_analysis(const std::vector<double>& a, const MoebiusSieve& sieve,
                                       const Signature& signature) {
    if (a.size() < 3) throw std::domain_error("need at least 3 values");
    std::vector<double> b(a.size() - 1);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) b[k] = a[k + 1] - a[k];
    const std::vector<double> c = dirichlet_convolve(b, sieve);

    DifferenceAnalysis out;
    out.signature = signature;
    for (std::size_t m = 2; m <= b.size(); ++m) {
        if (classify(m, sieve) == signature) out.samples.push_back(c[m - 1]);
    }
    if (out.samples.size() < 8) throw std::domain_error("too few samples on the requested curve");
    out.fit = normal_fit(out.samples);
    out.hist = histogram(out.samples, FreedmanDiaconis{});
    const std::size_t n = out.samples.size();
    std::vector<double> sorted = out.samples;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        out.probit_overlay.emplace_back(p, probit(p, out.fit.mean, out.fit.stddev));
    }
    return out;
}

}  // namespace cyclelab
