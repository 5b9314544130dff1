#pragma once

// Sparse integer incidence matrices: the boundary operators on the primal
// mesh and their transposes, which serve as discrete derivatives.
//
// Conventions: rows always index the lower-dimensional side of a boundary
// operator (edges for faces->edges, vertices for edges->vertices). An edge
// [i,j] with i<j is oriented i->j, so its boundary is [j]-[i]; a face
// contributes +1 to an edge whose canonical direction agrees with the
// face's CCW traversal and -1 otherwise. Entries are integers so operator
// identities such as boundary-of-boundary = 0 hold exactly.

#include <ostream>
#include <vector>

#include "dec2d/mesh.hpp"

namespace dec2d {

enum class IncidenceRole { Boundary21, Boundary10, Derivative01, DualBoundary21 };

struct IncidenceMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    struct Entry {
        int row;
        int col;
        int value; // -1 or +1
    };
    std::vector<Entry> entries; // sorted by (col, row), unique
    IncidenceRole role = IncidenceRole::Boundary21;

    // Dense expansion, row-major. Intended for tests and small meshes.
    std::vector<int> dense() const {
        std::vector<int> d(rows * cols, 0);
        for (const Entry& e : entries)
            d[static_cast<std::size_t>(e.row) * cols + static_cast<std::size_t>(e.col)] = e.value;
        return d;
    }
};

namespace detail {

inline void sort_entries(IncidenceMatrix& m) {
    std::sort(m.entries.begin(), m.entries.end(),
              [](const IncidenceMatrix::Entry& a, const IncidenceMatrix::Entry& b) {
                  return a.col != b.col ? a.col < b.col : a.row < b.row;
              });
}

} // namespace detail

// Faces -> edges. Column t holds the three signed edges of triangle t.
inline IncidenceMatrix boundary_2_1(const TriangleMesh& mesh) {
    IncidenceMatrix m;
    m.rows = mesh.num_edges();
    m.cols = mesh.num_triangles();
    m.role = IncidenceRole::Boundary21;
    m.entries.reserve(mesh.num_triangles() * 3);
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k)
            m.entries.push_back({mesh.tri_edges[t][static_cast<std::size_t>(k)],
                                 static_cast<int>(t),
                                 mesh.tri_edge_signs[t][static_cast<std::size_t>(k)]});
    detail::sort_entries(m);
    return m;
}

// Edges -> vertices. Column e holds -1 at the tail and +1 at the head.
inline IncidenceMatrix boundary_1_0(const TriangleMesh& mesh) {
    IncidenceMatrix m;
    m.rows = mesh.num_vertices();
    m.cols = mesh.num_edges();
    m.role = IncidenceRole::Boundary10;
    m.entries.reserve(mesh.num_edges() * 2);
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        m.entries.push_back({mesh.edges[e][0], static_cast<int>(e), -1});
        m.entries.push_back({mesh.edges[e][1], static_cast<int>(e), +1});
    }
    detail::sort_entries(m);
    return m;
}

inline IncidenceMatrix transpose(const IncidenceMatrix& a, IncidenceRole role) {
    IncidenceMatrix m;
    m.rows = a.cols;
    m.cols = a.rows;
    m.role = role;
    m.entries.reserve(a.entries.size());
    for (const auto& e : a.entries) m.entries.push_back({e.col, e.row, e.value});
    detail::sort_entries(m);
    return m;
}

// Discrete derivative on vertex values: the transpose of boundary_1_0.
inline IncidenceMatrix derivative_0_1(const TriangleMesh& mesh) {
    return transpose(boundary_1_0(mesh), IncidenceRole::Derivative01);
}

// Boundary operator of the dual mesh: -(boundary_1_0)^T. Dual faces are
// indexed by primal vertices and dual edges by primal edges.
inline IncidenceMatrix dual_boundary_2_1(const TriangleMesh& mesh) {
    IncidenceMatrix m = transpose(boundary_1_0(mesh), IncidenceRole::DualBoundary21);
    for (auto& e : m.entries) e.value = -e.value;
    return m;
}

// Exact integer product, dense result (test/diagnostic sizes).
inline std::vector<long long> multiply_dense(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("incidence multiply: dimension mismatch");
    std::vector<long long> out(a.rows * b.cols, 0);
    // index a's entries by row of b = col of a
    std::vector<std::vector<IncidenceMatrix::Entry>> by_col(a.cols);
    for (const auto& e : a.entries) by_col[static_cast<std::size_t>(e.col)].push_back(e);
    for (const auto& eb : b.entries)
        for (const auto& ea : by_col[static_cast<std::size_t>(eb.row)])
            out[static_cast<std::size_t>(ea.row) * b.cols + static_cast<std::size_t>(eb.col)] +=
                static_cast<long long>(ea.value) * eb.value;
    return out;
}

// MatrixMarket coordinate dump (1-based indices).
inline void write_matrix_market(const IncidenceMatrix& m, std::ostream& out) {
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
    for (const auto& e : m.entries) out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
}

} // namespace dec2d
