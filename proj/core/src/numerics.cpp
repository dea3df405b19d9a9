#include "cyclelab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace cyclelab {

namespace {

// Dense column-major least squares via Householder QR. Returns the solution
// and fills rinv with R^{-1} (upper triangular) for the covariance factor.
std::vector<double> qr_solve(std::vector<std::vector<double>>& cols, std::vector<double> y,
                             std::vector<std::vector<double>>& rinv) {
    const std::size_t m = y.size();
    const std::size_t k = cols.size();
    std::vector<std::vector<double>> r(k, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        // Householder vector for column j below the diagonal.
        double norm = 0.0;
        for (std::size_t i = j; i < m; ++i) norm += cols[j][i] * cols[j][i];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::domain_error("rank-deficient design matrix");
        double alpha = cols[j][j] > 0 ? -norm : norm;
        std::vector<double> v(m, 0.0);
        for (std::size_t i = j; i < m; ++i) v[i] = cols[j][i];
        v[j] -= alpha;
        double vtv = 0.0;
        for (std::size_t i = j; i < m; ++i) vtv += v[i] * v[i];
        if (vtv > 0.0) {
            for (std::size_t c = j; c < k; ++c) {
                double dot = 0.0;
                for (std::size_t i = j; i < m; ++i) dot += v[i] * cols[c][i];
                const double f = 2.0 * dot / vtv;
                for (std::size_t i = j; i < m; ++i) cols[c][i] -= f * v[i];
            }
            double dot = 0.0;
            for (std::size_t i = j; i < m; ++i) dot += v[i] * y[i];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = j; i < m; ++i) y[i] -= f * v[i];
        }
        for (std::size_t c = j; c < k; ++c) r[j][c] = cols[c][j];
    }
    // Back substitution for the solution.
    std::vector<double> beta(k, 0.0);
    for (std::size_t j = k; j-- > 0;) {
        double s = y[j];
        for (std::size_t c = j + 1; c < k; ++c) s -= r[j][c] * beta[c];
        beta[j] = s / r[j][j];
    }
    // R^{-1} column by column.
    rinv.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<double> e(k, 0.0);
        e[c] = 1.0;
        for (std::size_t j = k; j-- > 0;) {
            double s = e[j];
            for (std::size_t t = j + 1; t < k; ++t) s -= r[j][t] * rinv[t][c];
            rinv[j][c] = s / r[j][j];
        }
    }
    return beta;
}

double binomial(int n, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

FitResult polyfit(const std::vector<double>& xs, const std::vector<double>& ys, int degree) {
    const std::size_t m = xs.size();
    const std::size_t k = static_cast<std::size_t>(degree) + 1;
    if (degree < 1) throw std::domain_error("degree must be >= 1");
    if (m != ys.size() || m <= k) throw std::domain_error("need more points than coefficients");
    const double xmin = *std::min_element(xs.begin(), xs.end());
    const double xmax = *std::max_element(xs.begin(), xs.end());
    if (xmin == xmax) throw std::domain_error("degenerate abscissae");

    // Fit in the centered/scaled variable u = (x - mu) / sigma, then map back.
    const double mu = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(m);
    double var = 0.0;
    for (double x : xs) var += (x - mu) * (x - mu);
    const double sigma = std::sqrt(var / static_cast<double>(m - 1));

    std::vector<std::vector<double>> cols(k, std::vector<double>(m, 1.0));
    for (std::size_t i = 0; i < m; ++i) {
        const double u = (xs[i] - mu) / sigma;
        double pw = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
            cols[c][i] = pw;
            pw *= u;
        }
    }
    std::vector<std::vector<double>> rinv;
    std::vector<std::vector<double>> work = cols;
    const std::vector<double> a = qr_solve(work, ys, rinv);  // ascending powers of u

    // Map u-coefficients to raw powers of x: u^c = sum_j C(c,j) (-mu)^(c-j) x^j / sigma^c.
    // T[j][c] holds the contribution of a_c to the raw coefficient of x^j.
    std::vector<std::vector<double>> T(k, std::vector<double>(k, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
        const double sc = std::pow(sigma, static_cast<double>(c));
        for (std::size_t j = 0; j <= c; ++j) {
            T[j][c] = binomial(static_cast<int>(c), static_cast<int>(j)) *
                      std::pow(-mu, static_cast<double>(c - j)) / sc;
        }
    }
    std::vector<double> raw(k, 0.0);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < k; ++c) raw[j] += T[j][c] * a[c];

    FitResult fit;
    fit.degree = degree;
    fit.coefficients.assign(raw.rbegin(), raw.rend());  // highest degree first

    double sse = 0.0;
    double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(m);
    double sstot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double pred = 0.0;
        const double u = (xs[i] - mu) / sigma;
        double pw = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
            pred += a[c] * pw;
            pw *= u;
        }
        const double res = ys[i] - pred;
        sse += res * res;
        sstot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    fit.sse = sse;
    fit.r2 = sstot > 0.0 ? 1.0 - sse / sstot : 1.0;
    const double dof = static_cast<double>(m - k);
    fit.rmse = std::sqrt(sse / dof);

    // Cov(a) = s^2 (X^T X)^{-1} = s^2 Rinv Rinv^T; Cov(raw) = T Cov(a) T^T.
    const double s2 = sse / dof;
    std::vector<std::vector<double>> cov_a(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < k; ++t) s += rinv[i][t] * rinv[j][t];
            cov_a[i][j] = s2 * s;
        }
    boost::math::students_t tdist(dof);
    const double tq = boost::math::quantile(tdist, 0.975);
    fit.ci95.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        double vjj = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t d = 0; d < k; ++d) vjj += T[j][c] * cov_a[c][d] * T[j][d];
        const double half = tq * std::sqrt(vjj);
        // raw[j] is the coefficient of x^j; ci95 mirrors the highest-first order.
        fit.ci95[k - 1 - j] = {raw[j] - half, raw[j] + half};
    }
    return fit;
}

NormalFit normal_fit(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n < 8) throw std::domain_error("need at least 8 samples");
    NormalFit fit;
    fit.count = n;
    fit.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : samples) ss += (v - fit.mean) * (v - fit.mean);
    fit.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    if (ss == 0.0) {
        fit.degenerate = true;
        fit.mean_ci95 = {fit.mean, fit.mean};
        fit.std_ci95 = {0.0, 0.0};
        return fit;
    }
    const double dof = static_cast<double>(n - 1);
    boost::math::students_t tdist(dof);
    const double tq = boost::math::quantile(tdist, 0.975);
    const double half = tq * fit.stddev / std::sqrt(static_cast<double>(n));
    fit.mean_ci95 = {fit.mean - half, fit.mean + half};
    boost::math::chi_squared chi(dof);
    const double lo = boost::math::quantile(chi, 0.975);
    const double hi = boost::math::quantile(chi, 0.025);
    fit.std_ci95 = {fit.stddev * std::sqrt(dof / lo), fit.stddev * std::sqrt(dof / hi)};
    return fit;
}

namespace {

// Acklam's rational approximation to the inverse normal CDF (|e| < 1.15e-9),
// then one Halley step against the erfc-based forward CDF.
double probit_acklam(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r, z;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        q = p - 0.5;
        r = q * q;
        z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    return z;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); }

}  // namespace

double probit(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie in (0, 1)");
    double z = probit_acklam(p);
    const double e = normal_cdf(z) - p;
    const double u = e / normal_pdf(z);
    z -= u / (1.0 + 0.5 * z * u);  // Halley refinement
    return z;
}

double probit(double p, double mu, double sigma) { return mu + sigma * probit(p); }

Histogram histogram(const std::vector<double>& samples, const BinRule& rule) {
    if (samples.empty()) throw std::domain_error("empty sample set");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front();
    const double hi = sorted.back();
    const std::size_t n = sorted.size();

    double width = 0.0;
    std::size_t bins = 1;
    bool span_exact = true;  // edges rescaled so the last edge lands on hi
    if (const auto* fixed = std::get_if<FixedWidth>(&rule)) {
        if (fixed->width <= 0.0) throw std::domain_error("bin width must be positive");
        // The grid keeps the requested width; enough bins to hold hi.
        width = fixed->width;
        bins = static_cast<std::size_t>(std::floor((hi - lo) / width)) + 1;
        span_exact = false;
    } else {
        // Freedman-Diaconis, floored at 12 bins.
        const double q1 = sorted[(n - 1) / 4];
        const double q3 = sorted[(3 * (n - 1)) / 4];
        const double iqr = q3 - q1;
        width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
        if (hi == lo) {
            bins = 1;
            width = 1.0;
            span_exact = false;
        } else {
            bins = (width > 0.0)
                       ? std::max<std::size_t>(
                             12, static_cast<std::size_t>(std::ceil((hi - lo) / width)))
                       : 12;
            width = (hi - lo) / static_cast<double>(bins);
        }
    }

    Histogram h;
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
    if (span_exact) h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double v : sorted) {
        std::size_t idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;  // last bin closed
        ++h.counts[idx];
    }
    return h;
}

}  // namespace cyclelab
