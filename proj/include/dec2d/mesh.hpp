#pragma once

// Oriented 2D triangle mesh with a canonical edge table.
//
// Triangles are stored counterclockwise (inputs are flipped on load if
// needed). Edges are derived, stored as [min,max] vertex pairs and sorted
// lexicographically, so every operator matrix built on top of a mesh is
// reproducible across runs regardless of the input's own edge bookkeeping.
// The orientation an edge has inside a particular triangle is carried
// separately as a +-1 sign.
//
// A TriangleMesh is immutable after construction; share freely across threads.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dec2d/geometry.hpp"

namespace dec2d {

struct MeshError : std::runtime_error {
    explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

struct TriangleMesh {
    std::vector<Point2> vertices;
    std::vector<std::array<int, 3>> triangles; // CCW vertex triples
    std::vector<int> vertex_markers;           // boundary markers from input, 0 if none

    // Derived connectivity.
    std::vector<std::array<int, 2>> edges;          // canonical [min,max], lexicographic
    std::vector<std::array<int, 3>> tri_edges;      // edge id of directed edge (v[k], v[k+1])
    std::vector<std::array<int, 3>> tri_edge_signs; // +1 if that directed edge equals [min,max]
    std::vector<std::array<int, 2>> edge_triangles; // incident triangles, -1 when absent
    std::vector<int> boundary_edges;                // sorted edge ids with one incident triangle
    std::vector<int> boundary_vertices;             // sorted
    std::vector<std::uint8_t> edge_on_boundary;
    std::vector<std::uint8_t> vertex_on_boundary;

    std::size_t reoriented = 0; // triangles flipped to CCW during construction

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const { return edges.size(); }
    std::size_t num_triangles() const { return triangles.size(); }

    Point2 point(int v) const { return vertices[static_cast<std::size_t>(v)]; }

    // Canonical edge id for vertex pair {i,j}, or -1 if no such edge.
    int edge_between(int i, int j) const {
        const std::array<int, 2> key{std::min(i, j), std::max(i, j)};
        const auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (it == edges.end() || *it != key) return -1;
        return static_cast<int>(it - edges.begin());
    }

    double primal_edge_length(int e) const {
        const auto& ed = edges[static_cast<std::size_t>(e)];
        return norm(point(ed[1]) - point(ed[0]));
    }
};

inline double signed_area(const TriangleMesh& mesh, int tri) {
    const auto& t = mesh.triangles[static_cast<std::size_t>(tri)];
    return signed_area(mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2]));
}

inline double mesh_area(const TriangleMesh& mesh) {
    double area = 0.0;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
        area += signed_area(mesh, static_cast<int>(t));
    return area;
}

namespace detail {

inline double bbox_diag_sq(const std::vector<Point2>& pts) {
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double dx = xmax - xmin, dy = ymax - ymin;
    return dx * dx + dy * dy;
}

} // namespace detail

// Validates and completes a mesh from raw vertices and triangles:
// checks index ranges and finiteness, enforces CCW orientation (flipping
// where needed), derives the canonical edge table and boundary sets, and
// rejects degenerate triangles, non-manifold edges, isolated vertices and
// edge-disconnected meshes.
inline TriangleMesh build_mesh(std::vector<Point2> vertices,
                               std::vector<std::array<int, 3>> triangles,
                               std::vector<int> vertex_markers = {}) {
    TriangleMesh mesh;
    if (vertices.empty()) throw MeshError("mesh has no vertices");
    if (triangles.empty()) throw MeshError("mesh has no triangles");
    for (const Point2& p : vertices)
        if (!is_finite(p)) throw MeshError("non-finite vertex coordinate");
    if (!vertex_markers.empty() && vertex_markers.size() != vertices.size())
        throw MeshError("marker count does not match vertex count");

    const int nv = static_cast<int>(vertices.size());
    const double area_tol = 1e-14 * detail::bbox_diag_sq(vertices);

    mesh.vertices = std::move(vertices);
    mesh.vertex_markers = vertex_markers.empty() ? std::vector<int>(mesh.vertices.size(), 0)
                                                 : std::move(vertex_markers);

    for (auto& t : triangles) {
        for (int v : t)
            if (v < 0 || v >= nv)
                throw MeshError("triangle vertex index " + std::to_string(v) + " out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw MeshError("triangle repeats a vertex");
        const double area = signed_area(mesh.vertices[static_cast<std::size_t>(t[0])],
                                        mesh.vertices[static_cast<std::size_t>(t[1])],
                                        mesh.vertices[static_cast<std::size_t>(t[2])]);
        if (std::abs(area) <= area_tol)
            throw MeshError("zero-area triangle [" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + "," + std::to_string(t[2]) + "]");
        if (area < 0.0) {
            std::swap(t[1], t[2]);
            ++mesh.reoriented;
        }
    }
    mesh.triangles = std::move(triangles);

    // Canonical edge table.
    std::vector<std::array<int, 2>> pairs;
    pairs.reserve(mesh.triangles.size() * 3);
    for (const auto& t : mesh.triangles)
        for (int k = 0; k < 3; ++k) {
            const int a = t[static_cast<std::size_t>(k)];
            const int b = t[static_cast<std::size_t>((k + 1) % 3)];
            pairs.push_back({std::min(a, b), std::max(a, b)});
        }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    mesh.edges = std::move(pairs);

    const std::size_t ne = mesh.edges.size();
    mesh.edge_triangles.assign(ne, {-1, -1});
    mesh.tri_edges.resize(mesh.triangles.size());
    mesh.tri_edge_signs.resize(mesh.triangles.size());
    std::vector<int> edge_count(ne, 0);

    for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        for (int k = 0; k < 3; ++k) {
            const int a = t[static_cast<std::size_t>(k)];
            const int b = t[static_cast<std::size_t>((k + 1) % 3)];
            const int e = mesh.edge_between(a, b);
            mesh.tri_edges[ti][static_cast<std::size_t>(k)] = e;
            mesh.tri_edge_signs[ti][static_cast<std::size_t>(k)] = (a < b) ? 1 : -1;
            const std::size_t eu = static_cast<std::size_t>(e);
            if (edge_count[eu] >= 2)
                throw MeshError("non-manifold edge [" + std::to_string(mesh.edges[eu][0]) + "," +
                                std::to_string(mesh.edges[eu][1]) + "] lies in more than two triangles");
            mesh.edge_triangles[eu][static_cast<std::size_t>(edge_count[eu])] = static_cast<int>(ti);
            ++edge_count[eu];
        }
    }

    // Every vertex must be used by some triangle.
    std::vector<std::uint8_t> used(mesh.vertices.size(), 0);
    for (const auto& t : mesh.triangles)
        for (int v : t) used[static_cast<std::size_t>(v)] = 1;
    for (std::size_t v = 0; v < used.size(); ++v)
        if (!used[v]) throw MeshError("isolated vertex " + std::to_string(v));

    // Edge-connectivity: BFS over the triangle adjacency graph.
    {
        std::vector<std::uint8_t> seen(mesh.triangles.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int e : mesh.tri_edges[static_cast<std::size_t>(t)])
                for (int other : mesh.edge_triangles[static_cast<std::size_t>(e)])
                    if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                        seen[static_cast<std::size_t>(other)] = 1;
                        ++visited;
                        stack.push_back(other);
                    }
        }
        if (visited != mesh.triangles.size())
            throw MeshError("mesh has multiple edge-connected components");
    }

    mesh.edge_on_boundary.assign(ne, 0);
    mesh.vertex_on_boundary.assign(mesh.vertices.size(), 0);
    for (std::size_t e = 0; e < ne; ++e) {
        if (edge_count[e] == 1) {
            mesh.edge_on_boundary[e] = 1;
            mesh.boundary_edges.push_back(static_cast<int>(e));
            mesh.vertex_on_boundary[static_cast<std::size_t>(mesh.edges[e][0])] = 1;
            mesh.vertex_on_boundary[static_cast<std::size_t>(mesh.edges[e][1])] = 1;
        }
    }
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
        if (mesh.vertex_on_boundary[v]) mesh.boundary_vertices.push_back(static_cast<int>(v));

    return mesh;
}

// Boundary loops as ordered vertex cycles. Each boundary edge is traversed in
// the direction its (single) triangle traverses it, so the outer loop comes
// out counterclockwise and hole loops clockwise; the signed shoelace areas of
// all loops then sum to the mesh area.
inline std::vector<std::vector<int>> boundary_loops(const TriangleMesh& mesh) {
    // next[v] = successor of v along its outgoing boundary edge
    std::vector<int> next(mesh.num_vertices(), -1);
    for (int e : mesh.boundary_edges) {
        const std::size_t eu = static_cast<std::size_t>(e);
        const int t = mesh.edge_triangles[eu][0];
        // Direction of e inside triangle t.
        int from = mesh.edges[eu][0], to = mesh.edges[eu][1];
        for (int k = 0; k < 3; ++k)
            if (mesh.tri_edges[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] == e) {
                if (mesh.tri_edge_signs[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] < 0)
                    std::swap(from, to);
                break;
            }
        if (next[static_cast<std::size_t>(from)] != -1)
            throw MeshError("boundary vertex " + std::to_string(from) +
                            " has more than two incident boundary edges");
        next[static_cast<std::size_t>(from)] = to;
    }

    std::vector<std::vector<int>> loops;
    std::vector<std::uint8_t> done(mesh.num_vertices(), 0);
    for (int start : mesh.boundary_vertices) {
        if (done[static_cast<std::size_t>(start)]) continue;
        std::vector<int> loop;
        int v = start;
        do {
            loop.push_back(v);
            done[static_cast<std::size_t>(v)] = 1;
            v = next[static_cast<std::size_t>(v)];
            if (v < 0) throw MeshError("open boundary chain at vertex " + std::to_string(loop.back()));
        } while (v != start);
        loops.push_back(std::move(loop));
    }
    return loops;
}

inline double loop_shoelace_area(const TriangleMesh& mesh, const std::vector<int>& loop) {
    double twice = 0.0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const Point2 p = mesh.point(loop[k]);
        const Point2 q = mesh.point(loop[(k + 1) % loop.size()]);
        twice += cross(p, q);
    }
    return 0.5 * twice;
}

} // namespace dec2d
