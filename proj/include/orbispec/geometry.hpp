#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbispec {

inline constexpr double kPi = 3.14159265358979323846;

// Unordered pitch-class pair stored canonically in the fundamental
// triangle T_gamma = { 0 <= y <= x < gamma }.
struct DyadPoint {
    double x = 0.0;
    double y = 0.0;
};

// Parameter domain [0, pi) x [-1/2, 1/2] of the Moebius strip.
struct StripCoords {
    double alpha = 0.0;
    double r = 0.0;
};

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

// Reduce mod gamma on both coordinates, then order so x >= y.
// Idempotent and constant on orbits of the swap / shift group.
inline DyadPoint canonicalize(double x, double y, double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("canonicalize: gamma must be positive");
    auto wrap = [gamma](double v) {
        v = std::fmod(v, gamma);
        if (v < 0.0) v += gamma;
        return v;
    };
    x = wrap(x);
    y = wrap(y);
    if (x < y) std::swap(x, y);
    return {x, y};
}

// Interval size of a canonical dyad in cents (100 per semitone).
inline double interval_cents(const DyadPoint& p) {
    return 100.0 * (p.x - p.y);
}

// Piecewise map from the unit fundamental triangle T_1 to strip coordinates.
// The x + y = 1 boundary takes the second branch.
inline StripCoords phi(double x, double y) {
    if (!(0.0 <= y && y <= x && x < 1.0))
        throw std::domain_error("phi: point outside fundamental domain T_1");
    if (x + y < 1.0)
        return {kPi * (x + y), x - y - 0.5};
    return {kPi * (x + y - 1.0), y - x + 0.5};
}

// Inverse of phi; returns the unique preimage in T_1.
inline DyadPoint phi_inverse(const StripCoords& s) {
    const double t = s.alpha / kPi;
    if (t >= s.r + 0.5) {
        // first branch: x + y = t, x - y = r + 1/2
        return {(t + s.r + 0.5) / 2.0, (t - s.r - 0.5) / 2.0};
    }
    // second branch: x + y = t + 1, y - x = r - 1/2
    return {(t + 1.5 - s.r) / 2.0, (t + 0.5 + s.r) / 2.0};
}

// Standard Moebius strip embedding in R^3. Satisfies the gluing identity
// moebius_embed({pi, r}) = moebius_embed({0, -r}) = (1 - r, 0, 0).
inline Point3 moebius_embed(const StripCoords& s) {
    const double w = 1.0 + s.r * std::cos(s.alpha);
    return {std::cos(2.0 * s.alpha) * w, std::sin(2.0 * s.alpha) * w,
            s.r * std::sin(s.alpha)};
}

struct MoebiusMesh {
    std::vector<Point3> vertices;
    std::vector<double> scalars; // per-vertex field value
    std::vector<std::array<int, 3>> faces;
};

// Triangulated Moebius strip with a scalar field sampled at the preimages in
// T_1. The grid has n_alpha columns over alpha in [0, pi) and n_r + 1 rows
// over r in [-1/2, 1/2]; the alpha = pi column is welded onto alpha = 0 with
// r negated, so the vertex count is n_alpha * (n_r + 1) and the face count
// 2 * n_alpha * n_r.
inline MoebiusMesh build_moebius_mesh(int n_alpha, int n_r,
                                      const std::function<double(double, double)>& field_t1) {
    if (n_alpha < 2 || n_r < 1)
        throw std::invalid_argument("build_moebius_mesh: resolution too small");

    MoebiusMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(n_alpha) * (n_r + 1));
    mesh.scalars.reserve(mesh.vertices.capacity());
    for (int i = 0; i < n_alpha; ++i) {
        const double alpha = kPi * static_cast<double>(i) / n_alpha;
        for (int j = 0; j <= n_r; ++j) {
            const double r = -0.5 + static_cast<double>(j) / n_r;
            const StripCoords s{alpha, r};
            mesh.vertices.push_back(moebius_embed(s));
            const DyadPoint p = phi_inverse(s);
            mesh.scalars.push_back(field_t1(p.x, p.y));
        }
    }

    // vertex id of grid node (i, j), welding the seam column i == n_alpha
    auto vid = [n_alpha, n_r](int i, int j) {
        if (i == n_alpha) return 0 * (n_r + 1) + (n_r - j); // (pi, r) ~ (0, -r)
        return i * (n_r + 1) + j;
    };
    for (int i = 0; i < n_alpha; ++i) {
        for (int j = 0; j < n_r; ++j) {
            mesh.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    }
    return mesh;
}

} // namespace orbispec
