// Independent test oracles, kept away from the implementation paths they
// check.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Brute-force minimal-denominator search: scan b = 1..b_max, smallest
// numerator first, using the same closed-interval membership predicate in
// double arithmetic as the implementation under test.
inline std::optional<std::pair<std::int64_t, std::int64_t>>
brute_min_denominator(double lo, double hi, std::int64_t b_max) {
    for (std::int64_t b = 1; b <= b_max; ++b) {
        std::int64_t a = static_cast<std::int64_t>(std::floor(lo * static_cast<double>(b))) - 1;
        if (a < 1) a = 1;
        for (;; ++a) {
            const double v = static_cast<double>(a) / static_cast<double>(b);
            if (v < lo) continue;
            if (v > hi) break;
            if (std::gcd(a, b) == 1) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

// 5-point periodic finite-difference Laplacian on an n x n grid with spacing
// h = gamma / n (row-major samples).
inline std::vector<double> fd_laplacian(const std::vector<double>& f, int n, double gamma) {
    const double h = gamma / n;
    std::vector<double> out(f.size());
    auto idx = [n](int i, int j) {
        return static_cast<std::size_t>((i % n + n) % n) * n + ((j % n + n) % n);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[idx(i, j)] = (f[idx(i + 1, j)] + f[idx(i - 1, j)] + f[idx(i, j + 1)] +
                              f[idx(i, j - 1)] - 4.0 * f[idx(i, j)]) /
                             (h * h);
    return out;
}

} // namespace oracle
