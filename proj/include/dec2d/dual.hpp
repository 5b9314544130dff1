#pragma once

// Circumcentric dual mesh measures.
//
// Dual vertices are triangle circumcenters; the dual of an edge joins the
// circumcenters of its adjacent triangles (ending at the edge midpoint on the
// boundary); the dual cell of a vertex is bounded by those segments and, on
// the boundary, by half primal edges. All measures are SIGNED: for an obtuse
// triangle the circumcenter leaves the triangle and the pieces of dual length
// and area that fall outside enter with a negative sign. The determinant
// expressions below produce these signs with no case analysis:
//
//  - an edge's per-triangle contribution is cross(q-p, c-p)/|q-p| with (p,q)
//    taken in the triangle's CCW order, i.e. the distance from the
//    circumcenter c to the edge line, positive exactly when c lies on the
//    same side as the opposite vertex;
//  - a vertex's cell is accumulated from shoelace areas of the corner
//    triangles (p, mid(p,q), c) and (mid(p,q), q, c) over all CCW edges
//    (p,q), which tile each triangle exactly, signs included.
//
// Consequently sum(dual vertex areas) == sum(triangle areas) up to rounding
// on any mesh, well-centered or not.

#include <vector>

#include "dec2d/mesh.hpp"

namespace dec2d {

struct DualMetrics {
    std::vector<Point2> circumcenters;    // per triangle
    std::vector<double> dual_edge_length; // per edge, signed
    std::vector<double> dual_vertex_area; // per vertex, signed
};

inline Point2 circumcenter(const TriangleMesh& mesh, int tri) {
    const auto& t = mesh.triangles[static_cast<std::size_t>(tri)];
    return circumcenter(mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2]));
}

// Signed distance from a triangle's circumcenter to the line of one of its
// edges; positive iff the circumcenter lies on the triangle's side.
inline double signed_dual_edge_contribution(const TriangleMesh& mesh, int tri, int edge) {
    const auto& te = mesh.tri_edges[static_cast<std::size_t>(tri)];
    int slot = -1;
    for (int k = 0; k < 3; ++k)
        if (te[static_cast<std::size_t>(k)] == edge) slot = k;
    if (slot < 0)
        throw std::invalid_argument("edge " + std::to_string(edge) + " is not part of triangle " +
                                    std::to_string(tri));
    const auto& t = mesh.triangles[static_cast<std::size_t>(tri)];
    const Point2 p = mesh.point(t[static_cast<std::size_t>(slot)]);
    const Point2 q = mesh.point(t[static_cast<std::size_t>((slot + 1) % 3)]);
    const Point2 c = circumcenter(mesh, tri);
    return cross(q - p, c - p) / norm(q - p);
}

inline DualMetrics dual_metrics(const TriangleMesh& mesh) {
    DualMetrics dm;
    dm.circumcenters.resize(mesh.num_triangles());
    dm.dual_edge_length.assign(mesh.num_edges(), 0.0);
    dm.dual_vertex_area.assign(mesh.num_vertices(), 0.0);

    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const Point2 c = circumcenter(mesh, static_cast<int>(ti));
        dm.circumcenters[ti] = c;
        for (int k = 0; k < 3; ++k) {
            const int pv = t[static_cast<std::size_t>(k)];
            const int qv = t[static_cast<std::size_t>((k + 1) % 3)];
            const Point2 p = mesh.point(pv);
            const Point2 q = mesh.point(qv);
            const Point2 m = midpoint(p, q);
            const int e = mesh.tri_edges[ti][static_cast<std::size_t>(k)];
            dm.dual_edge_length[static_cast<std::size_t>(e)] += cross(q - p, c - p) / norm(q - p);
            dm.dual_vertex_area[static_cast<std::size_t>(pv)] += signed_area(p, m, c);
            dm.dual_vertex_area[static_cast<std::size_t>(qv)] += signed_area(m, q, c);
        }
    }
    return dm;
}

// Triangles whose circumcenter falls strictly outside of them. Such
// triangles make some dual measures negative or zero; the solve pipeline
// accepts them, but users inspecting negative Hodge entries start here.
inline std::vector<int> non_well_centered(const TriangleMesh& mesh, const DualMetrics& dm) {
    std::vector<int> out;
    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const Point2 c = dm.circumcenters[ti];
        for (int k = 0; k < 3; ++k) {
            const Point2 p = mesh.point(t[static_cast<std::size_t>(k)]);
            const Point2 q = mesh.point(t[static_cast<std::size_t>((k + 1) % 3)]);
            if (cross(q - p, c - p) < 0.0) {
                out.push_back(static_cast<int>(ti));
                break;
            }
        }
    }
    return out;
}

} // namespace dec2d
