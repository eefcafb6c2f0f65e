#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numbers>

namespace toric {

/// Exact rational scalar. Phases are stored as fractions of a full turn,
/// i.e. the fraction f represents the angle 2*pi*f.
using Rat = boost::rational<std::int64_t>;

/// Reduce into [0, 1).
inline Rat mod_one(const Rat& r) {
    std::int64_t num = r.numerator();
    std::int64_t den = r.denominator();  // > 0 by boost invariant
    std::int64_t q = num / den;
    if (num % den < 0) --q;
    return r - q;
}

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Angle in radians of a turn fraction. Equal reduced fractions give
/// bit-identical doubles, so exact constructions carry no phase drift.
inline double turn_to_angle(const Rat& turns) {
    return 2.0 * std::numbers::pi * to_double(turns);
}

}  // namespace toric
