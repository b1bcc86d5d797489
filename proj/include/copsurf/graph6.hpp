#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"

namespace copsurf {

/// Largest order representable with the 4-byte graph6 size prefix.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

namespace detail {

inline constexpr int kGraph6Bias = 63;

inline int graph6_value(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", pos);
    return c - kGraph6Bias;
}

} // namespace detail

/// Decode one graph6 line. Accepts an optional ">>graph6<<" header and a
/// trailing newline; padding bits are ignored.
inline Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) base = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() <= base) throw ParseError("graph6: empty input", base);

    std::size_t pos = base;
    std::size_t n = 0;
    if (text[pos] != 126) {
        n = static_cast<std::size_t>(detail::graph6_value(text, pos));
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
        throw CapacityError("graph6: orders above " + std::to_string(kGraph6MaxOrder) +
                            " are not supported");
    } else {
        for (int i = 1; i <= 3; ++i) {
            n = (n << 6) | static_cast<std::size_t>(detail::graph6_value(text, pos + i));
        }
        if (n <= 62) throw ParseError("graph6: non-canonical long size header", pos);
        pos += 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() < pos + bytes) throw ParseError("graph6: truncated bit field", text.size());
    if (text.size() > pos + bytes) throw ParseError("graph6: trailing bytes", pos + bytes);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = detail::graph6_value(text, pos + k / 6);
            if (chunk & (1 << (5 - k % 6))) edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

/// Canonical graph6 encoding (no header, no newline).
inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds " +
                            std::to_string(kGraph6MaxOrder));
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + detail::kGraph6Bias));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kGraph6Bias));
        }
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> chunks((bits + 5) / 6, 0);
    for (Edge e : g.edges()) {
        // Column-major upper triangle: bit index of (i,j), i<j, is j(j-1)/2 + i.
        std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
        chunks[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
    }
    for (unsigned char c : chunks) out.push_back(static_cast<char>(c + detail::kGraph6Bias));
    return out;
}

} // namespace copsurf
