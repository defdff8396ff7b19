#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sbl {

/// Plain (sum, sum of squares, count) accumulator. Merging is associative,
/// which is what keeps blocked parallel reductions bit-reproducible.
struct RunningStat {
    double sum = 0.0;
    double sum_sq = 0.0;
    long long n = 0;

    void add(double v)
    {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    void merge(const RunningStat& o)
    {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }
    double mean() const { return n > 0 ? sum / static_cast<double>(n) : 0.0; }
    double variance() const; // unbiased; 0 for n < 2
    double std_error() const;
};

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b].
Quadrature gauss_legendre(int n, double a, double b);

struct BatchMeansEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long n_samples = 0;
    long long n_batches = 0;
};

/// Standard error of the mean of a serially correlated series by
/// non-overlapping batch means. Segments are treated as independent chains:
/// batches never straddle a segment boundary. Trailing partial batches are
/// dropped from the error estimate (the mean uses all samples).
BatchMeansEstimate batch_means(const std::vector<std::span<const double>>& segments,
                               int batch_size);
BatchMeansEstimate batch_means(std::span<const double> series, int batch_size);

/// Batch-means covariance of two series observed on the same draws, for
/// delta-method errors on ratios of ergodic averages.
struct BivariateBatchStats {
    double mean_a = 0.0, mean_b = 0.0;
    double var_mean_a = 0.0, var_mean_b = 0.0, cov_mean_ab = 0.0;
    long long n_batches = 0;
};
BivariateBatchStats batch_means_bivariate(const std::vector<std::span<const double>>& a,
                                          const std::vector<std::span<const double>>& b,
                                          int batch_size);

/// Effective sample size n / (1 + 2 sum rho_k) with Geyer's initial positive
/// sequence truncation. Returns a value in [1, n].
double effective_sample_size(std::span<const double> series);

struct KsResult {
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    double n_eff_1 = 0.0;
    double n_eff_2 = 0.0; // unused for one-sample tests
};

/// Two-sample Kolmogorov-Smirnov test at significance `level`, with sample
/// sizes replaced by effective sample sizes to account for serial
/// correlation.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b, double level);

/// One-sample KS against N(mean, sigma^2), ESS-adjusted.
KsResult ks_gaussian(std::span<const double> a, double mean, double sigma, double level);

double gaussian_cdf(double z);

} // namespace sbl
