#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "orbispec/basis.hpp"
#include "orbispec/field.hpp"

namespace orbispec {

// Fourier coefficients against an ordered SymmetricMode basis.
struct SpectrumCoeffs {
    std::vector<double> values;
};

struct ShapeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The grid cannot resolve the requested modes (aliasing would corrupt the
// quadrature).
struct NyquistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_resolvable(std::span<const SymmetricMode> basis, int n) {
    const int c = max_abs_frequency(basis);
    if (2 * c >= n)
        throw NyquistError("grid resolution " + std::to_string(n) +
                           " cannot resolve basis frequencies up to " + std::to_string(c) +
                           " (need n > 2*" + std::to_string(c) + ")");
}

// Orbifold inner product: half the torus rectangle-rule integral. Exact on
// trigonometric polynomials below the grid Nyquist limit.
inline double inner_product(const GridField& f, const GridField& g) {
    if (f.n != g.n || f.gamma != g.gamma)
        throw ShapeMismatchError("inner_product: field geometry mismatch");
    double acc = 0.0;
    const std::size_t total = f.samples.size();
    for (std::size_t i = 0; i < total; ++i) acc += f.samples[i] * g.samples[i];
    const double h = f.gamma / f.n;
    return 0.5 * h * h * acc;
}

inline double norm(const GridField& f) { return std::sqrt(inner_product(f, f)); }

// f_hat(k) = <f, psi_k> for every mode of the basis.
inline SpectrumCoeffs forward_transform(const GridField& f,
                                        std::span<const SymmetricMode> basis) {
    require_resolvable(basis, f.n);
    const double h = f.gamma / f.n;
    const double quad = 0.5 * h * h;
    SpectrumCoeffs out;
    out.values.reserve(basis.size());
    for (const auto& mode : basis) {
        const std::vector<double> psi = sample_mode_grid(mode, f.n);
        double acc = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) acc += psi[i] * f.samples[i];
        out.values.push_back(quad * acc);
    }
    return out;
}

// Synthesis sum f(x) = sum_k c_k psi_k(x) on the grid.
inline GridField inverse_transform(const SpectrumCoeffs& c,
                                   std::span<const SymmetricMode> basis, double gamma, int n) {
    if (c.values.size() != basis.size())
        throw ShapeMismatchError("inverse_transform: coefficient/basis length mismatch");
    require_resolvable(basis, n);
    GridField out(gamma, n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (c.values[k] == 0.0) continue;
        const std::vector<double> psi = sample_mode_grid(basis[k], n);
        for (std::size_t i = 0; i < psi.size(); ++i) out.samples[i] += c.values[k] * psi[i];
    }
    return out;
}

// Pointwise synthesis at an arbitrary point (exact for band-limited fields).
inline double evaluate_spectrum(const SpectrumCoeffs& c,
                                std::span<const SymmetricMode> basis, double x, double y) {
    if (c.values.size() != basis.size())
        throw ShapeMismatchError("evaluate_spectrum: coefficient/basis length mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k)
        acc += c.values[k] * evaluate_mode(basis[k], x, y);
    return acc;
}

// Spectral convolution: inverse transform of the pointwise coefficient
// product, F(f * g)(k) = f_hat(k) g_hat(k).
inline GridField convolve(const GridField& f, const GridField& g,
                          std::span<const SymmetricMode> basis) {
    if (f.n != g.n || f.gamma != g.gamma)
        throw ShapeMismatchError("convolve: field geometry mismatch");
    SpectrumCoeffs fh = forward_transform(f, basis);
    const SpectrumCoeffs gh = forward_transform(g, basis);
    for (std::size_t k = 0; k < fh.values.size(); ++k) fh.values[k] *= gh.values[k];
    return inverse_transform(fh, basis, f.gamma, f.n);
}

// Ideal low-pass filter coefficients: 1 for k <= n_cut, 0 above.
inline SpectrumCoeffs lowpass_coeffs(int n_cut, std::span<const SymmetricMode> basis) {
    if (n_cut < 0 || n_cut >= static_cast<int>(basis.size()))
        throw std::out_of_range("lowpass_coeffs: n_cut outside basis range");
    SpectrumCoeffs out;
    out.values.assign(basis.size(), 0.0);
    for (int k = 0; k <= n_cut; ++k) out.values[k] = 1.0;
    return out;
}

// Convolution with the low-pass filter g_n, i.e. orthogonal projection onto
// the span of the first n_cut + 1 modes. Implemented by truncating the
// spectrum, which is the same operator.
inline GridField smooth(const GridField& f, int n_cut, std::span<const SymmetricMode> basis) {
    if (n_cut < 0 || n_cut >= static_cast<int>(basis.size()))
        throw std::out_of_range("smooth: n_cut outside basis range");
    SpectrumCoeffs c = forward_transform(f, basis);
    for (std::size_t k = n_cut + 1; k < c.values.size(); ++k) c.values[k] = 0.0;
    return inverse_transform(c, basis, f.gamma, f.n);
}

// Dirichlet energy, computed spectrally: sum_k lambda_k f_hat(k)^2 over the
// supplied basis (truncation error is the caller's responsibility for
// non-band-limited fields).
inline double dirichlet_energy(const GridField& f, std::span<const SymmetricMode> basis) {
    const SpectrumCoeffs c = forward_transform(f, basis);
    double acc = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k)
        acc += basis[k].eigenvalue * c.values[k] * c.values[k];
    return acc;
}

} // namespace orbispec
