#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "orbispec/field.hpp"
#include "orbispec/geometry.hpp"

namespace orbispec {

enum class ModeKind { Constant, DiagonalCos, DiagonalSin, OffdiagCos, OffdiagSin };

inline const char* to_string(ModeKind k) {
    switch (k) {
        case ModeKind::Constant: return "constant";
        case ModeKind::DiagonalCos: return "diagonal-cos";
        case ModeKind::DiagonalSin: return "diagonal-sin";
        case ModeKind::OffdiagCos: return "offdiag-cos";
        case ModeKind::OffdiagSin: return "offdiag-sin";
    }
    return "?";
}

// Torus Laplace eigenvalue (2 pi / gamma)^2 (c1^2 + c2^2).
inline double torus_eigenvalue(int c1, int c2, double gamma) {
    const double w = 2.0 * kPi / gamma;
    return w * w * (static_cast<double>(c1) * c1 + static_cast<double>(c2) * c2);
}

// One orthonormal real swap-symmetric eigenfunction of the Laplacian on
// the dyad orbifold T^2_gamma / S_2. The frequency pair (c1, c2) is the
// canonical orbit representative with c1 >= |c2| and c1 >= 0; the value at
// (x, y) is
//   norm_const * (trig(w(c1 x + c2 y)) + trig(w(c2 x + c1 y))) / 2,
// with w = 2 pi / gamma, trig = cos for the cos kinds and the constant mode,
// sin otherwise.
struct SymmetricMode {
    int k = 0; // spectral index in the enumerated, eigenvalue-ordered basis
    ModeKind kind = ModeKind::Constant;
    int c1 = 0, c2 = 0;
    double gamma = 12.0;
    double eigenvalue = 0.0;
    double norm_const = 0.0;
};

struct BasisSpec {
    double gamma = 12.0;
    int n_modes = 1;
};

inline double evaluate_mode(const SymmetricMode& m, double x, double y) {
    const double w = 2.0 * kPi / m.gamma;
    const double a1 = w * (m.c1 * x + m.c2 * y);
    const double a2 = w * (m.c2 * x + m.c1 * y);
    const bool use_sin = (m.kind == ModeKind::DiagonalSin || m.kind == ModeKind::OffdiagSin);
    const double avg = use_sin ? 0.5 * (std::sin(a1) + std::sin(a2))
                               : 0.5 * (std::cos(a1) + std::cos(a2));
    return m.norm_const * avg;
}

// Evaluate a mode on the uniform n x n torus grid. The phase at grid node
// (i, j) is 2 pi (c1 i + c2 j) / n exactly, so a single period-n trig table
// gives alias-free samples.
inline std::vector<double> sample_mode_grid(const SymmetricMode& m, int n) {
    std::vector<double> cos_tab(n), sin_tab(n);
    for (int k = 0; k < n; ++k) {
        const double a = 2.0 * kPi * k / n;
        cos_tab[k] = std::cos(a);
        sin_tab[k] = std::sin(a);
    }
    const bool use_sin = (m.kind == ModeKind::DiagonalSin || m.kind == ModeKind::OffdiagSin);
    const double* tab = use_sin ? sin_tab.data() : cos_tab.data();
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int p1 = ((m.c1 * i + m.c2 * j) % n + n) % n;
            const int p2 = ((m.c2 * i + m.c1 * j) % n + n) % n;
            out[static_cast<std::size_t>(i) * n + j] = m.norm_const * 0.5 * (tab[p1] + tab[p2]);
        }
    }
    return out;
}

namespace detail {

// Append the real symmetric modes of one canonical frequency orbit.
// Normalization makes the list orthonormal under the orbifold inner product
// (1/2 of the torus integral):
//   constant            sqrt(2)/gamma
//   diagonal c1 == c2   2/gamma
//   anti-diagonal cos   2/gamma   (its sin partner vanishes under R)
//   generic off-diag    2*sqrt(2)/gamma
inline void append_orbit_modes(std::vector<SymmetricMode>& modes, int c1, int c2, double gamma) {
    const double lambda = torus_eigenvalue(c1, c2, gamma);
    if (c1 == 0 && c2 == 0) {
        modes.push_back({0, ModeKind::Constant, 0, 0, gamma, 0.0, std::sqrt(2.0) / gamma});
    } else if (c1 == c2) {
        modes.push_back({0, ModeKind::DiagonalCos, c1, c2, gamma, lambda, 2.0 / gamma});
        modes.push_back({0, ModeKind::DiagonalSin, c1, c2, gamma, lambda, 2.0 / gamma});
    } else if (c1 == -c2) {
        modes.push_back({0, ModeKind::OffdiagCos, c1, c2, gamma, lambda, 2.0 / gamma});
    } else {
        modes.push_back({0, ModeKind::OffdiagCos, c1, c2, gamma, lambda, 2.0 * std::sqrt(2.0) / gamma});
        modes.push_back({0, ModeKind::OffdiagSin, c1, c2, gamma, lambda, 2.0 * std::sqrt(2.0) / gamma});
    }
}

} // namespace detail

// First n_modes symmetric modes ordered by ascending eigenvalue; ties break
// by kind (constant < diagonal-cos < diagonal-sin < offdiag-cos < offdiag-sin)
// and then lexicographically on (c1, c2).
inline std::vector<SymmetricMode> enumerate_basis(const BasisSpec& spec) {
    if (!(spec.gamma > 0.0) || spec.n_modes < 1)
        throw std::invalid_argument("enumerate_basis: invalid spec");

    // Canonical representatives with c1 <= c_max cover every eigenvalue level
    // c1^2 + c2^2 <= c_max^2; grow c_max until the requested prefix is closed.
    int c_max = static_cast<int>(std::ceil(std::sqrt(2.0 * spec.n_modes))) + 1;
    for (;;) {
        std::vector<SymmetricMode> modes;
        for (int c1 = 0; c1 <= c_max; ++c1)
            for (int c2 = -c1; c2 <= c1; ++c2)
                detail::append_orbit_modes(modes, c1, c2, spec.gamma);
        std::stable_sort(modes.begin(), modes.end(),
                         [](const SymmetricMode& a, const SymmetricMode& b) {
                             const long sa = static_cast<long>(a.c1) * a.c1 + static_cast<long>(a.c2) * a.c2;
                             const long sb = static_cast<long>(b.c1) * b.c1 + static_cast<long>(b.c2) * b.c2;
                             return std::tuple(sa, static_cast<int>(a.kind), a.c1, a.c2) <
                                    std::tuple(sb, static_cast<int>(b.kind), b.c1, b.c2);
                         });
        if (static_cast<int>(modes.size()) >= spec.n_modes) {
            const auto& last = modes[spec.n_modes - 1];
            const long s_last = static_cast<long>(last.c1) * last.c1 + static_cast<long>(last.c2) * last.c2;
            if (s_last <= static_cast<long>(c_max) * c_max) {
                modes.resize(spec.n_modes);
                for (int k = 0; k < spec.n_modes; ++k) modes[k].k = k;
                return modes;
            }
        }
        c_max *= 2;
    }
}

// Largest |c| occurring in the basis; transforms on an n x n grid are exact
// when 2 * max_abs_frequency(basis) < n.
inline int max_abs_frequency(std::span<const SymmetricMode> basis) {
    int m = 0;
    for (const auto& mode : basis)
        m = std::max({m, std::abs(mode.c1), std::abs(mode.c2)});
    return m;
}

// Spec(Delta_X) is contained in Spec(Delta_M): every eigenvalue must equal
// (2 pi / gamma)^2 * s for an integer s that is a sum of two squares.
inline bool spectrum_inclusion_check(std::span<const SymmetricMode> basis, double gamma,
                                     double tol = 1e-9) {
    const double w = 2.0 * kPi / gamma;
    for (const auto& mode : basis) {
        const double s = mode.eigenvalue / (w * w);
        const long s_int = std::lround(s);
        if (s_int < 0 || std::fabs(s - static_cast<double>(s_int)) * w * w > tol)
            return false;
        bool representable = false;
        for (long c1 = 0; c1 * c1 <= s_int && !representable; ++c1) {
            const long rest = s_int - c1 * c1;
            const long c2 = std::lround(std::sqrt(static_cast<double>(rest)));
            if (c2 * c2 == rest) representable = true;
        }
        if (!representable) return false;
    }
    return true;
}

// Human-readable record of the enumeration rule, kept with run manifests.
inline std::string basis_ordering_description() {
    return "ascending eigenvalue (2pi/gamma)^2 (c1^2+c2^2); ties by kind "
           "(constant < diagonal-cos < diagonal-sin < offdiag-cos < offdiag-sin) "
           "then lexicographic (c1, c2) on the canonical representative with c1 >= |c2|";
}

} // namespace orbispec
