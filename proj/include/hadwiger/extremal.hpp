#ifndef HADWIGER_EXTREMAL_HPP
#define HADWIGER_EXTREMAL_HPP

#include <array>
#include <optional>

namespace hadwiger {

/// Cited extremal edge counts: a K_{t+1}-minor-free graph with at least
/// min_vertices vertices has at most coeff*n - constant edges.
struct ExtremalBound {
    int t_plus_1;
    int coeff;
    int constant;
    int min_vertices;

    friend bool operator==(const ExtremalBound&, const ExtremalBound&) = default;
};

// The K9 row has no known vertex minimum here; 5 is assumed.
inline constexpr std::array<ExtremalBound, 7> kExtremalBounds{{
    {5, 3, 6, 3},
    {6, 4, 10, 4},
    {7, 5, 15, 5},
    {8, 6, 20, 5},
    {9, 7, 27, 5},
    {10, 11, 66, 10},
    {11, 13, 89, 11},
}};

inline constexpr std::optional<ExtremalBound> extremal_bound(int t_plus_1)
{
    for (const auto& b : kExtremalBounds)
        if (b.t_plus_1 == t_plus_1)
            return b;
    return std::nullopt;
}

} // namespace hadwiger

#endif // HADWIGER_EXTREMAL_HPP
