#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbispec/geometry.hpp"
#include "orbispec/rational.hpp"

namespace orbispec {

struct PeriodicityConfig {
    double jnd_cents = 20.0; // just noticeable difference, in cents
    std::int64_t max_denominator_guard = 1'000'000;
};

// Logarithmic periodicity log2(b) of the reduced frequency ratio a/b.
inline double periodicity_log(const RationalRatio& r) {
    return std::log2(static_cast<double>(r.den));
}

// JND-tolerant periodicity of an interval of d cents: the minimal log2(b)
// over all rationals a/b whose interval lies within jnd_cents of d. Realized
// exactly by the minimal-denominator rational in the cent window
// [d - JND, d + JND]. The lower ratio bound is clamped to 1 so windows around
// small d keep the a >= b normalization (1/1 is then always in range).
inline double p_jnd(double d_cents, const PeriodicityConfig& cfg = {}) {
    if (!(d_cents >= 0.0))
        throw std::domain_error("p_jnd: interval size must be non-negative");
    const double lo = std::max(1.0, std::exp2((d_cents - cfg.jnd_cents) / 1200.0));
    const double hi = std::exp2((d_cents + cfg.jnd_cents) / 1200.0);
    return periodicity_log(min_denominator_rational(lo, hi, cfg.max_denominator_guard));
}

// Inversion-symmetric periodicity: min of the interval and its octave
// complement.
inline double p_jnd_sym(double d_cents, const PeriodicityConfig& cfg = {}) {
    if (!(d_cents >= 0.0 && d_cents <= 1200.0))
        throw std::domain_error("p_jnd_sym: interval must lie in [0, 1200] cents");
    return std::min(p_jnd(d_cents, cfg), p_jnd(1200.0 - d_cents, cfg));
}

// Pullback of the symmetric periodicity to the dyad orbifold: x and y are
// semitone pitch classes (period 12). Invariant under coordinate swap and
// octave shifts by construction.
inline double p_plus_field(double x, double y, const PeriodicityConfig& cfg = {}) {
    const DyadPoint p = canonicalize(x, y, 12.0);
    return p_jnd_sym(interval_cents(p), cfg);
}

} // namespace orbispec
