#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbispec {

// Reduced fraction a/b with a >= b >= 1, representing a frequency ratio >= 1.
struct RationalRatio {
    std::int64_t num = 1;
    std::int64_t den = 1;

    friend bool operator==(const RationalRatio&, const RationalRatio&) = default;
};

struct EmptyIntervalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when the Stern-Brocot descent exceeds the denominator guard,
// which signals a degenerate (near zero-width) search interval.
struct GuardExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational with the smallest denominator in the closed interval [lo, hi]
// (smallest numerator on the impossible-in-practice denominator tie).
//
// Stern-Brocot descent: starting from the full tree (0/1, 1/0), replace the
// left or right endpoint by the mediant until the mediant lands inside the
// interval. The first mediant inside the interval is the unique fraction with
// minimal denominator, and it is automatically reduced.
inline RationalRatio min_denominator_rational(double lo, double hi,
                                              std::int64_t max_denominator_guard = 1'000'000) {
    if (!(lo > 0.0) || !(hi > 0.0) || lo > hi)
        throw EmptyIntervalError("min_denominator_rational: empty interval [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");

    std::int64_t left_num = 0, left_den = 1;   // 0/1
    std::int64_t right_num = 1, right_den = 0; // 1/0 = infinity
    for (;;) {
        const std::int64_t med_num = left_num + right_num;
        const std::int64_t med_den = left_den + right_den;
        if (med_den > max_denominator_guard)
            throw GuardExceededError("min_denominator_rational: denominator guard " +
                                     std::to_string(max_denominator_guard) + " exceeded");
        const double mediant = static_cast<double>(med_num) / static_cast<double>(med_den);
        if (mediant < lo) {
            left_num = med_num;
            left_den = med_den;
        } else if (mediant > hi) {
            right_num = med_num;
            right_den = med_den;
        } else {
            return {med_num, med_den};
        }
    }
}

} // namespace orbispec
