#ifndef PEEL_RATIONAL_HPP
#define PEEL_RATIONAL_HPP

#include <string>

#include <json.hpp>

#include "peel/errors.hpp"

namespace peel {

// Reduced fraction with positive denominator.  Small by construction: the
// exact LP works in arbitrary precision internally and narrows only its
// final optimum, which at the supported sizes always fits.
struct RationalValue {
    long long num = 0;
    long long den = 1;

    bool operator==(const RationalValue& o) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    // ceil(num/den); requires num >= 0.
    long long ceil() const { return (num + den - 1) / den; }

    nlohmann::json to_json() const { return {{"num", num}, {"den", den}}; }
};

// 2*chi_star <= omega + delta + 1, compared exactly.
inline bool molloy_reed_holds(int omega, int delta, const RationalValue& chi_star)
{
    return 2 * chi_star.num <= static_cast<long long>(omega + delta + 1) * chi_star.den;
}

// Exact integer ceilings used by every bound in the tool.
inline long long ceil_div(long long a, long long b)
{
    return (a + b - 1) / b;
}

inline int seven_sixths_bound(int omega)
{
    return static_cast<int>(ceil_div(7LL * omega, 6));
}

inline int reed_bound(int omega, int delta)
{
    return static_cast<int>(ceil_div(static_cast<long long>(omega) + delta + 1, 2));
}

// floor(1.1*delta + 0.7) without floating point.
inline int caprara_rizzi_floor(int delta)
{
    return static_cast<int>((11LL * delta + 7) / 10);
}

} // namespace peel

#endif
