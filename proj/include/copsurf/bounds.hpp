#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "copsurf/error.hpp"

namespace copsurf {

enum class OrientableMethod { Quilliot, Schroder };
enum class NonOrientableMethod { Andreae, NowakowskiSchroder, CoverTransfer };

/// Exact values that override the orientable formula: the sphere and the
/// double torus.
struct OrientableSpecialCase {
    std::uint64_t genus;
    std::uint64_t bound;
};
inline constexpr OrientableSpecialCase kOrientableSpecialCases[] = {{0, 3}, {2, 5}};

/// Upper bound on the cop number of graphs on the orientable surface of genus g.
inline std::uint64_t orientable_upper_bound(std::uint64_t g, OrientableMethod method) {
    if (method == OrientableMethod::Quilliot) return 2 * g + 3;
    for (auto sc : kOrientableSpecialCases)
        if (sc.genus == g) return sc.bound;
    return 3 * g / 2 + 3;
}

/// Upper bound on the cop number of graphs on the non-orientable surface
/// with g crosscaps (g >= 1).
inline std::uint64_t nonorientable_upper_bound(std::uint64_t g, NonOrientableMethod method) {
    if (g == 0) throw InvalidArgument("non-orientable genus starts at 1");
    switch (method) {
    case NonOrientableMethod::Andreae: {
        // floor(7/2 + sqrt(6g + 1/4)) = floor((7 + sqrt(24g + 1)) / 2), evaluated in integers.
        std::uint64_t disc = 24 * g + 1;
        auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(disc)));
        while (root * root > disc) --root;
        while ((root + 1) * (root + 1) <= disc) ++root;
        std::uint64_t m = (7 + root) / 2;
        return m * (m - 1) / 2;
    }
    case NonOrientableMethod::NowakowskiSchroder:
        return 2 * g + 1;
    case NonOrientableMethod::CoverTransfer:
        return orientable_upper_bound(g - 1, OrientableMethod::Schroder);
    }
    throw InvalidArgument("unknown method");
}

struct BoundsRow {
    std::uint64_t genus = 0;
    std::uint64_t ns_bound = 0;
    std::uint64_t here_bound = 0;

    friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

inline std::vector<BoundsRow> bounds_table(std::uint64_t max_genus) {
    if (max_genus == 0) throw InvalidArgument("max genus must be at least 1");
    std::vector<BoundsRow> rows;
    for (std::uint64_t g = 1; g <= max_genus; ++g) {
        rows.push_back({g, nonorientable_upper_bound(g, NonOrientableMethod::NowakowskiSchroder),
                        nonorientable_upper_bound(g, NonOrientableMethod::CoverTransfer)});
    }
    return rows;
}

inline std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
    std::string out = "g,ns_bound,here_bound\n";
    for (const auto& r : rows) {
        out += std::to_string(r.genus) + "," + std::to_string(r.ns_bound) + "," + std::to_string(r.here_bound) + "\n";
    }
    return out;
}

} // namespace copsurf
