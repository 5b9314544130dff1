#pragma once

// Diagonal discrete Hodge stars built from the circumcentric dual measures:
// per-edge dual/primal length ratios and per-vertex dual cell areas, plus the
// inverse of the latter. Entries may be negative or zero on meshes with
// obtuse triangles; they are passed through as-is.

#include <ostream>
#include <vector>

#include "dec2d/dual.hpp"
#include "dec2d/mesh.hpp"

namespace dec2d {

enum class HodgeRole { Hodge11, Hodge02, Hodge20 };

struct DiagonalOperator {
    std::size_t size = 0;
    std::vector<double> diagonal;
    HodgeRole role = HodgeRole::Hodge11;
};

// Primal 1-forms -> dual 1-forms: entry per edge, dual length / primal length.
inline DiagonalOperator hodge_1_1(const TriangleMesh& mesh, const DualMetrics& dm) {
    DiagonalOperator op;
    op.size = mesh.num_edges();
    op.role = HodgeRole::Hodge11;
    op.diagonal.resize(op.size);
    for (std::size_t e = 0; e < op.size; ++e)
        op.diagonal[e] = dm.dual_edge_length[e] / mesh.primal_edge_length(static_cast<int>(e));
    return op;
}

// Primal 0-forms -> dual 2-forms: entry per vertex, signed dual cell area.
inline DiagonalOperator hodge_0_2(const TriangleMesh& mesh, const DualMetrics& dm) {
    DiagonalOperator op;
    op.size = mesh.num_vertices();
    op.role = HodgeRole::Hodge02;
    op.diagonal = dm.dual_vertex_area;
    for (std::size_t v = 0; v < op.size; ++v)
        if (op.diagonal[v] == 0.0)
            throw MeshError("degenerate dual cell: vertex " + std::to_string(v) +
                            " has zero dual area");
    return op;
}

// Dual 2-forms -> primal 0-forms: reciprocal dual areas.
inline DiagonalOperator hodge_2_0(const TriangleMesh& mesh, const DualMetrics& dm) {
    DiagonalOperator op = hodge_0_2(mesh, dm);
    op.role = HodgeRole::Hodge20;
    for (double& d : op.diagonal) d = 1.0 / d;
    return op;
}

inline void write_csv(const DiagonalOperator& op, std::ostream& out) {
    out << (op.role == HodgeRole::Hodge11 ? "edge,value\n" : "vertex,value\n");
    char buf[32];
    for (std::size_t i = 0; i < op.size; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", op.diagonal[i]);
        out << i << ',' << buf << '\n';
    }
}

} // namespace dec2d
