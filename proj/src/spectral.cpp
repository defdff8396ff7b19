#include "sbl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sbl {

bool SpectralField::all_finite() const
{
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](double c) { return std::isfinite(c); });
}

SpectralField SpectralField::basis(int n_modes, int k, double amplitude)
{
    if (k < 1 || k > n_modes) throw std::domain_error("basis: mode index out of range");
    SpectralField x(n_modes);
    x[k - 1] = amplitude;
    return x;
}

double eigenvalue(int k)
{
    if (k < 1) throw std::domain_error("eigenvalue: basis is indexed from 1");
    const double kpi = static_cast<double>(k) * std::numbers::pi;
    return kpi * kpi;
}

SineTransform::SineTransform(int n_modes, int m_points)
    : n_(n_modes), m_(m_points),
      sine_(static_cast<std::size_t>(m_points) * n_modes),
      cosine_(static_cast<std::size_t>(m_points) * n_modes)
{
    if (n_ < 1) throw std::invalid_argument("SineTransform: n_modes must be >= 1");
    if (m_ < n_) throw std::invalid_argument("SineTransform: m_points must be >= n_modes");
    const double h = 1.0 / (m_ + 1);
    const double root2 = std::numbers::sqrt2;
    for (int j = 0; j < m_; ++j) {
        const double xi = (j + 1) * h;
        for (int k = 0; k < n_; ++k) {
            const double arg = (k + 1) * std::numbers::pi * xi;
            sine_[static_cast<std::size_t>(j) * n_ + k] = root2 * std::sin(arg);
            cosine_[static_cast<std::size_t>(j) * n_ + k] = std::cos(arg);
        }
    }
}

void SineTransform::to_grid(const double* coeffs, double* values) const
{
    for (int j = 0; j < m_; ++j) {
        const double* row = &sine_[static_cast<std::size_t>(j) * n_];
        double acc = 0.0;
        for (int k = 0; k < n_; ++k) acc += row[k] * coeffs[k];
        values[j] = acc;
    }
}

void SineTransform::to_coeffs(const double* values, double* coeffs) const
{
    // DST-I orthogonality: sum_j sin(k pi xi_j) sin(l pi xi_j) = (m+1)/2 delta_kl.
    const double w = 1.0 / (m_ + 1);
    for (int k = 0; k < n_; ++k) coeffs[k] = 0.0;
    for (int j = 0; j < m_; ++j) {
        const double* row = &sine_[static_cast<std::size_t>(j) * n_];
        const double v = values[j] * w;
        for (int k = 0; k < n_; ++k) coeffs[k] += row[k] * v;
    }
}

GridField SineTransform::to_grid(const SpectralField& x) const
{
    if (x.n_modes() != n_) throw std::invalid_argument("to_grid: mode count mismatch");
    GridField g;
    g.values.resize(static_cast<std::size_t>(m_));
    to_grid(x.coeffs.data(), g.values.data());
    return g;
}

SpectralField SineTransform::to_coeffs(const GridField& g) const
{
    if (g.m_points() != m_) throw std::invalid_argument("to_coeffs: grid size mismatch");
    SpectralField x(n_);
    to_coeffs(g.values.data(), x.coeffs.data());
    return x;
}

double SineTransform::integrate(const double* values) const
{
    double acc = 0.0;
    for (int j = 0; j < m_; ++j) acc += values[j];
    return acc / (m_ + 1);
}

void SineTransform::derivative_of_product(const double* u, const double* v, double* out) const
{
    // <d/dxi(uv), e_k> = -sqrt(2) k pi * int uv cos(k pi xi) by parts
    // (uv vanishes at both endpoints).
    const double w = 1.0 / (m_ + 1);
    for (int k = 0; k < n_; ++k) out[k] = 0.0;
    for (int j = 0; j < m_; ++j) {
        const double* row = &cosine_[static_cast<std::size_t>(j) * n_];
        const double p = u[j] * v[j] * w;
        for (int k = 0; k < n_; ++k) out[k] += row[k] * p;
    }
    const double c = -std::numbers::sqrt2 * std::numbers::pi;
    for (int k = 0; k < n_; ++k) out[k] *= c * (k + 1);
}

double sobolev_norm(const SpectralField& x, double alpha)
{
    double acc = 0.0;
    for (int k = 0; k < x.n_modes(); ++k) {
        acc += std::pow(eigenvalue(k + 1), alpha) * x[k] * x[k];
    }
    return std::sqrt(acc);
}

double lp_norm(const SpectralField& x, double p, int m_points)
{
    if (p < 1.0) throw std::domain_error("lp_norm: p must be >= 1");
    if (m_points < 2 * x.n_modes())
        throw std::invalid_argument("lp_norm: m_points must be >= 2*n_modes");
    if (std::isinf(p)) return linf_norm(x, m_points);
    const SineTransform plan(x.n_modes(), m_points);
    GridField g = plan.to_grid(x);
    double acc = 0.0;
    for (double v : g.values) acc += std::pow(std::abs(v), p);
    return std::pow(acc / (m_points + 1), 1.0 / p);
}

double linf_norm(const SpectralField& x, int m_points)
{
    if (m_points < 2 * x.n_modes())
        throw std::invalid_argument("linf_norm: m_points must be >= 2*n_modes");
    const SineTransform plan(x.n_modes(), m_points);
    GridField g = plan.to_grid(x);
    double mx = 0.0;
    for (double v : g.values) mx = std::max(mx, std::abs(v));
    return mx;
}

SpectralField burgers_b(const SpectralField& x, int m_points)
{
    const int n = x.n_modes();
    const int m = m_points > 0 ? m_points : 2 * n;
    if (m < 2 * n) throw std::invalid_argument("burgers_b: m_points must be >= 2*n_modes");
    const SineTransform plan(n, m);
    std::vector<double> grid(static_cast<std::size_t>(m));
    plan.to_grid(x.coeffs.data(), grid.data());
    SpectralField out(n);
    plan.derivative_of_product(grid.data(), grid.data(), out.coeffs.data());
    return out;
}

SpectralField burgers_jacobian_apply(const SpectralField& x, const SpectralField& eta,
                                     int m_points)
{
    const int n = x.n_modes();
    if (eta.n_modes() != n)
        throw std::invalid_argument("burgers_jacobian_apply: mode count mismatch");
    const int m = m_points > 0 ? m_points : 2 * n;
    if (m < 2 * n)
        throw std::invalid_argument("burgers_jacobian_apply: m_points must be >= 2*n_modes");
    const SineTransform plan(n, m);
    std::vector<double> gx(static_cast<std::size_t>(m)), ge(static_cast<std::size_t>(m));
    plan.to_grid(x.coeffs.data(), gx.data());
    plan.to_grid(eta.coeffs.data(), ge.data());
    for (int j = 0; j < m; ++j) gx[j] *= 2.0;
    SpectralField out(n);
    plan.derivative_of_product(gx.data(), ge.data(), out.coeffs.data());
    return out;
}

SpectralField apply_fractional_power(const SpectralField& x, double beta)
{
    SpectralField out(x.n_modes());
    for (int k = 0; k < x.n_modes(); ++k) out[k] = std::pow(eigenvalue(k + 1), beta) * x[k];
    return out;
}

SpectralField apply_laplacian(const SpectralField& x)
{
    SpectralField out(x.n_modes());
    for (int k = 0; k < x.n_modes(); ++k) out[k] = -eigenvalue(k + 1) * x[k];
    return out;
}

double inner(const SpectralField& x, const SpectralField& y)
{
    if (x.n_modes() != y.n_modes()) throw std::invalid_argument("inner: mode count mismatch");
    double acc = 0.0;
    for (int k = 0; k < x.n_modes(); ++k) acc += x[k] * y[k];
    return acc;
}

double l2_norm(const SpectralField& x)
{
    return std::sqrt(inner(x, x));
}

SpectralField operator+(const SpectralField& x, const SpectralField& y)
{
    if (x.n_modes() != y.n_modes()) throw std::invalid_argument("operator+: mode count mismatch");
    SpectralField out = x;
    for (int k = 0; k < x.n_modes(); ++k) out[k] += y[k];
    return out;
}

SpectralField operator-(const SpectralField& x, const SpectralField& y)
{
    if (x.n_modes() != y.n_modes()) throw std::invalid_argument("operator-: mode count mismatch");
    SpectralField out = x;
    for (int k = 0; k < x.n_modes(); ++k) out[k] -= y[k];
    return out;
}

SpectralField operator*(double a, const SpectralField& x)
{
    SpectralField out = x;
    for (double& c : out.coeffs) c *= a;
    return out;
}

} // namespace sbl
