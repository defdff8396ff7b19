#include "sbl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sbl {

double RunningStat::variance() const
{
    if (n < 2) return 0.0;
    const double m = mean();
    const double v = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return v > 0.0 ? v : 0.0;
}

double RunningStat::std_error() const
{
    if (n < 1) return 0.0;
    return std::sqrt(variance() / static_cast<double>(n));
}

Quadrature gauss_legendre(int n, double a, double b)
{
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    // Roots of P_n by Newton iteration from the Chebyshev-like initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1,1] -> [a,b]; reverse so nodes come out increasing
        q.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (b - a) * x + 0.5 * (a + b);
        q.weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (b - a) * w;
    }
    return q;
}

BatchMeansEstimate batch_means(const std::vector<std::span<const double>>& segments,
                               int batch_size)
{
    if (batch_size < 1) throw std::invalid_argument("batch_means: batch_size must be >= 1");
    BatchMeansEstimate out;
    double total = 0.0;
    long long n = 0;
    std::vector<double> batches;
    for (const auto& seg : segments) {
        for (double v : seg) total += v;
        n += static_cast<long long>(seg.size());
        const std::size_t full = seg.size() / static_cast<std::size_t>(batch_size);
        for (std::size_t b = 0; b < full; ++b) {
            double acc = 0.0;
            for (int j = 0; j < batch_size; ++j)
                acc += seg[b * static_cast<std::size_t>(batch_size) + static_cast<std::size_t>(j)];
            batches.push_back(acc / batch_size);
        }
    }
    if (n == 0) return out;
    out.n_samples = n;
    out.mean = total / static_cast<double>(n);
    out.n_batches = static_cast<long long>(batches.size());
    if (batches.size() >= 2) {
        double ss = 0.0;
        for (double b : batches) ss += (b - out.mean) * (b - out.mean);
        const double nb = static_cast<double>(batches.size());
        out.std_error = std::sqrt(ss / (nb * (nb - 1.0)));
    }
    return out;
}

BatchMeansEstimate batch_means(std::span<const double> series, int batch_size)
{
    return batch_means(std::vector<std::span<const double>>{series}, batch_size);
}

BivariateBatchStats batch_means_bivariate(const std::vector<std::span<const double>>& a,
                                          const std::vector<std::span<const double>>& b,
                                          int batch_size)
{
    if (a.size() != b.size())
        throw std::invalid_argument("batch_means_bivariate: segment count mismatch");
    BivariateBatchStats out;
    std::vector<double> ba, bb;
    double tot_a = 0.0, tot_b = 0.0;
    long long n = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].size() != b[s].size())
            throw std::invalid_argument("batch_means_bivariate: segment length mismatch");
        for (std::size_t i = 0; i < a[s].size(); ++i) {
            tot_a += a[s][i];
            tot_b += b[s][i];
        }
        n += static_cast<long long>(a[s].size());
        const std::size_t full = a[s].size() / static_cast<std::size_t>(batch_size);
        for (std::size_t k = 0; k < full; ++k) {
            double sa = 0.0, sb = 0.0;
            for (int j = 0; j < batch_size; ++j) {
                const std::size_t idx = k * static_cast<std::size_t>(batch_size) + static_cast<std::size_t>(j);
                sa += a[s][idx];
                sb += b[s][idx];
            }
            ba.push_back(sa / batch_size);
            bb.push_back(sb / batch_size);
        }
    }
    if (n == 0) return out;
    out.mean_a = tot_a / static_cast<double>(n);
    out.mean_b = tot_b / static_cast<double>(n);
    out.n_batches = static_cast<long long>(ba.size());
    if (ba.size() >= 2) {
        const double nb = static_cast<double>(ba.size());
        double va = 0.0, vb = 0.0, cab = 0.0;
        for (std::size_t i = 0; i < ba.size(); ++i) {
            va += (ba[i] - out.mean_a) * (ba[i] - out.mean_a);
            vb += (bb[i] - out.mean_b) * (bb[i] - out.mean_b);
            cab += (ba[i] - out.mean_a) * (bb[i] - out.mean_b);
        }
        out.var_mean_a = va / (nb * (nb - 1.0));
        out.var_mean_b = vb / (nb * (nb - 1.0));
        out.cov_mean_ab = cab / (nb * (nb - 1.0));
    }
    return out;
}

double effective_sample_size(std::span<const double> series)
{
    const std::size_t n = series.size();
    if (n < 4) return static_cast<double>(std::max<std::size_t>(n, 1));
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0;
    for (double v : series) c0 += (v - mean) * (v - mean);
    c0 /= static_cast<double>(n);
    if (c0 <= 0.0) return static_cast<double>(n);

    auto gamma = [&](std::size_t lag) {
        double acc = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i)
            acc += (series[i] - mean) * (series[i + lag] - mean);
        return acc / static_cast<double>(n);
    };

    // Geyer initial positive sequence: sum rho over lag pairs while positive.
    double rho_sum = 0.0;
    const std::size_t max_lag = n / 2;
    for (std::size_t m = 1; m + 1 <= max_lag; m += 2) {
        const double pair = (gamma(m) + gamma(m + 1)) / c0;
        if (pair <= 0.0) break;
        rho_sum += pair;
    }
    const double ess = static_cast<double>(n) / (1.0 + 2.0 * rho_sum);
    return std::clamp(ess, 1.0, static_cast<double>(n));
}

namespace {

double ks_critical(double level)
{
    // Asymptotic Kolmogorov quantile: P(D > c/sqrt(n)) = level.
    return std::sqrt(-0.5 * std::log(level / 2.0));
}

} // namespace

double gaussian_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b, double level)
{
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= v) ++i;
        while (j < sb.size() && sb[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsResult r;
    r.statistic = d;
    r.n_eff_1 = effective_sample_size(a);
    r.n_eff_2 = effective_sample_size(b);
    r.threshold = ks_critical(level) * std::sqrt(1.0 / r.n_eff_1 + 1.0 / r.n_eff_2);
    r.pass = d <= r.threshold;
    return r;
}

KsResult ks_gaussian(std::span<const double> a, double mean, double sigma, double level)
{
    if (a.empty()) throw std::invalid_argument("ks_gaussian: empty sample");
    if (sigma <= 0.0) throw std::invalid_argument("ks_gaussian: sigma must be positive");
    std::vector<double> s(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = gaussian_cdf((s[i] - mean) / sigma);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    KsResult r;
    r.statistic = d;
    r.n_eff_1 = effective_sample_size(a);
    r.threshold = ks_critical(level) / std::sqrt(r.n_eff_1);
    r.pass = d <= r.threshold;
    return r;
}

} // namespace sbl
