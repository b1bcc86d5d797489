#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "copsurf/error.hpp"
#include "copsurf/graph.hpp"

namespace copsurf {

using Point3 = std::array<double, 3>;

/// Convex polyhedron centred at the origin: vertex coordinates plus skeleton.
/// Edges join the pairs of vertices at minimum distance, which holds for all
/// five platonic solids.
struct Polyhedron {
    std::vector<Point3> points;
    Graph skeleton;
};

namespace detail {

inline double distance2(const Point3& a, const Point3& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

inline Polyhedron from_points(std::vector<Point3> pts) {
    double best = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance2(pts[i], pts[j]));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (distance2(pts[i], pts[j]) < best * (1 + 1e-9))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    Graph g(pts.size(), edges);
    return Polyhedron{std::move(pts), std::move(g)};
}

inline std::vector<Point3> cube_points() {
    std::vector<Point3> pts;
    for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
            for (double z : {-1.0, 1.0}) pts.push_back({x, y, z});
    return pts;
}

} // namespace detail

/// tetrahedron, cube, octahedron, dodecahedron or icosahedron.
inline Polyhedron platonic_solid(std::string_view name) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point3> pts;
    if (name == "tetrahedron") {
        pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (name == "cube") {
        pts = detail::cube_points();
    } else if (name == "octahedron") {
        pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    } else if (name == "dodecahedron") {
        pts = detail::cube_points();
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({0, a / phi, b * phi});
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({a / phi, b * phi, 0});
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({a * phi, 0, b / phi});
    } else if (name == "icosahedron") {
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({0, a, b * phi});
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({a, b * phi, 0});
        for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) pts.push_back({a * phi, 0, b});
    } else {
        throw InvalidArgument("unknown polyhedron '" + std::string(name) + "'");
    }
    return detail::from_points(std::move(pts));
}

/// Vertex at the negated coordinates of each vertex. Requires a centrally
/// symmetric solid (everything except the tetrahedron).
inline std::vector<Vertex> antipodal_map(const Polyhedron& p) {
    std::vector<Vertex> out(p.points.size());
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        Point3 neg{-p.points[i][0], -p.points[i][1], -p.points[i][2]};
        bool found = false;
        for (std::size_t j = 0; j < p.points.size(); ++j) {
            if (detail::distance2(neg, p.points[j]) < 1e-9) {
                out[i] = static_cast<Vertex>(j);
                found = true;
                break;
            }
        }
        if (!found) throw InvalidArgument("polyhedron is not centrally symmetric");
    }
    return out;
}

} // namespace copsurf
