#pragma once

// Plain 2D point/vector type plus the determinant-based primitives
// (signed areas, circumcenters) the rest of the library is built on.

#include <cmath>
#include <stdexcept>

namespace dec2d {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3D cross product, i.e. det[a b].
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Signed area of triangle (a,b,c); positive iff the vertices run counterclockwise.
inline double signed_area(Point2 a, Point2 b, Point2 c) {
    return 0.5 * cross(b - a, c - a);
}

// Point equidistant from a, b, c, found as the intersection of two
// perpendicular bisectors (closed-form 2x2 determinant solve). Throws for
// (near-)collinear input, where no finite circumcenter exists.
inline Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    const Point2 u = b - a;
    const Point2 v = c - a;
    const double d = cross(u, v);
    const double scale = std::max(dot(u, u), dot(v, v));
    if (std::abs(d) <= 1e-14 * scale)
        throw std::invalid_argument("circumcenter: collinear points");
    const double uu = dot(u, u);
    const double vv = dot(v, v);
    return {a.x + (uu * v.y - vv * u.y) / (2.0 * d),
            a.y + (vv * u.x - uu * v.x) / (2.0 * d)};
}

} // namespace dec2d
