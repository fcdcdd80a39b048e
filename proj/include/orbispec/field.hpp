#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace orbispec {

// Real function sampled on the uniform n x n torus grid at points
// (gamma * i / n, gamma * j / n), row-major. Swap-symmetric samples
// (samples[i][j] == samples[j][i]) represent a function on the orbifold
// via the pullback along the quotient map.
struct GridField {
    double gamma = 12.0;
    int n = 0;
    std::vector<double> samples;

    GridField() = default;
    GridField(double gamma_, int n_, double fill = 0.0)
        : gamma(gamma_), n(n_), samples(static_cast<std::size_t>(n_) * n_, fill) {
        if (!(gamma_ > 0.0) || n_ < 1)
            throw std::invalid_argument("GridField: invalid geometry");
    }

    double& at(int i, int j) { return samples[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return samples[static_cast<std::size_t>(i) * n + j]; }

    double x_of(int i) const { return gamma * static_cast<double>(i) / n; }
};

inline GridField sample_field(double gamma, int n,
                              const std::function<double(double, double)>& f) {
    GridField out(gamma, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = f(out.x_of(i), out.x_of(j));
    return out;
}

// Orthogonal projection R onto swap-symmetric functions:
// (Rf)(x, y) = (f(x, y) + f(y, x)) / 2.
inline GridField symmetrize(const GridField& f) {
    GridField out(f.gamma, f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j)
            out.at(i, j) = 0.5 * (f.at(i, j) + f.at(j, i));
    return out;
}

inline double max_swap_asymmetry(const GridField& f) {
    double dev = 0.0;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < i; ++j)
            dev = std::max(dev, std::fabs(f.at(i, j) - f.at(j, i)));
    return dev;
}

} // namespace orbispec
