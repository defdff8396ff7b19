#pragma once

#include <vector>

namespace sbl {

/// State of the PDE as real coefficients on the Dirichlet sine basis
/// e_k(xi) = sqrt(2) sin(k pi xi) of L^2(0,1). coeffs[i] is the coefficient
/// of mode k = i+1. The basis is orthonormal, so |x|^2 = sum x_k^2 and the
/// represented function vanishes at xi = 0 and xi = 1 identically.
struct SpectralField {
    std::vector<double> coeffs;

    SpectralField() = default;
    explicit SpectralField(int n_modes) : coeffs(static_cast<std::size_t>(n_modes), 0.0) {}

    int n_modes() const { return static_cast<int>(coeffs.size()); }
    double& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }

    bool all_finite() const;

    /// Unit basis vector e_k (1-based mode index k) embedded in n_modes.
    static SpectralField basis(int n_modes, int k, double amplitude = 1.0);
};

/// Point values of a field at m_points uniform interior nodes xi_j = j/(m+1).
struct GridField {
    std::vector<double> values;

    int m_points() const { return static_cast<int>(values.size()); }
};

/// Eigenvalue alpha_k = (k pi)^2 of the Dirichlet Laplacian on (0,1),
/// i.e. -A e_k = alpha_k e_k. Throws std::domain_error for k < 1.
double eigenvalue(int k);

/// Exact discrete sine transform between mode coefficients and interior grid
/// values. With m_points >= n_modes the round trip is the identity up to
/// round-off; quadratic products need m_points >= 2*n_modes to be dealiased.
/// Plans are cheap (two small dense matrices) and immutable once built.
class SineTransform {
public:
    SineTransform(int n_modes, int m_points);

    int n_modes() const { return n_; }
    int m_points() const { return m_; }

    GridField to_grid(const SpectralField& x) const;
    SpectralField to_coeffs(const GridField& g) const;

    /// Raw-buffer versions for hot loops; buffers must have the plan's sizes.
    void to_grid(const double* coeffs, double* values) const;
    void to_coeffs(const double* values, double* coeffs) const;

    /// Trapezoid quadrature of grid samples over [0,1] (endpoints vanish).
    double integrate(const double* values) const;

    /// Sine coefficients of d/dxi (u*v) from grid samples of u and v:
    /// out_k = -sqrt(2) k pi * integral of u*v*cos(k pi xi). Exact Galerkin
    /// projection when the product's cosine modes stay below 2(m+1).
    void derivative_of_product(const double* u, const double* v, double* out) const;

private:
    int n_;
    int m_;
    std::vector<double> sine_;   // m x n: sqrt(2) sin(k pi xi_j)
    std::vector<double> cosine_; // m x n: cos(k pi xi_j)
};

/// Fractional Sobolev norm |x|_alpha = (sum alpha_k^alpha x_k^2)^{1/2};
/// alpha = 0 is the L^2 norm. Negative alpha is allowed.
double sobolev_norm(const SpectralField& x, double alpha);

/// L^p(0,1) norm by uniform-grid trapezoid quadrature with m_points nodes
/// (p = infinity gives the grid max of |x|). Requires p >= 1 and
/// m_points >= 2*n_modes.
double lp_norm(const SpectralField& x, double p, int m_points);
double linf_norm(const SpectralField& x, int m_points);

/// Galerkin projection of the Burgers nonlinearity b(x) = d/dxi (x^2),
/// dealiased on a 2N-point grid (or larger if m_points is given).
SpectralField burgers_b(const SpectralField& x, int m_points = 0);

/// Action of the Jacobian b'(x) eta = d/dxi (2 x eta), dealiased as burgers_b.
SpectralField burgers_jacobian_apply(const SpectralField& x, const SpectralField& eta,
                                     int m_points = 0);

/// Coefficient-wise (-A)^beta: x_k -> alpha_k^beta x_k.
SpectralField apply_fractional_power(const SpectralField& x, double beta);

/// A x (the Laplacian itself): x_k -> -alpha_k x_k.
SpectralField apply_laplacian(const SpectralField& x);

double inner(const SpectralField& x, const SpectralField& y);
double l2_norm(const SpectralField& x);

SpectralField operator+(const SpectralField& x, const SpectralField& y);
SpectralField operator-(const SpectralField& x, const SpectralField& y);
SpectralField operator*(double a, const SpectralField& x);

} // namespace sbl
