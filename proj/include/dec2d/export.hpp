#pragma once

// Output writers: field CSV, legacy ASCII VTK unstructured grids (solution
// fields and the dual-mesh overlay), dual-measure CSVs, line-sample CSV and
// the comparison/convergence tables. CSV values carry 17 significant digits;
// human-facing tables use 6.

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "dec2d/dual.hpp"
#include "dec2d/mesh.hpp"
#include "dec2d/poisson.hpp"
#include "dec2d/study.hpp"

namespace dec2d {

namespace detail {

inline std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace detail

inline void write_fields_csv(const TriangleMesh& mesh, const SolveReport& report,
                             std::ostream& out) {
    out << "vertex,x,y,u,flux_mag\n";
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        out << v << ',' << detail::g17(mesh.vertices[v].x) << ',' << detail::g17(mesh.vertices[v].y)
            << ',' << detail::g17(report.solution[v]) << ','
            << detail::g17(report.flux_magnitude_per_vertex[v]) << '\n';
}

namespace detail {

inline void write_vtk_mesh_header(const TriangleMesh& mesh, const std::string& title,
                                  std::ostream& out) {
    out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << mesh.num_vertices() << " double\n";
    for (const Point2& p : mesh.vertices) out << g17(p.x) << ' ' << g17(p.y) << " 0\n";
    out << "CELLS " << mesh.num_triangles() << ' ' << 4 * mesh.num_triangles() << '\n';
    for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << "CELL_TYPES " << mesh.num_triangles() << '\n';
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) out << "5\n";
}

} // namespace detail

inline void write_solution_vtk(const TriangleMesh& mesh, const SolveReport& report,
                               std::ostream& out) {
    detail::write_vtk_mesh_header(mesh, "dec2d solution", out);
    out << "POINT_DATA " << mesh.num_vertices() << '\n';
    out << "SCALARS u double 1\nLOOKUP_TABLE default\n";
    for (double v : report.solution) out << detail::g17(v) << '\n';
    out << "SCALARS flux_magnitude double 1\nLOOKUP_TABLE default\n";
    for (double v : report.flux_magnitude_per_vertex) out << detail::g17(v) << '\n';
    out << "CELL_DATA " << mesh.num_triangles() << '\n';
    out << "VECTORS flux double\n";
    for (const Point2& f : report.flux_per_triangle)
        out << detail::g17(f.x) << ' ' << detail::g17(f.y) << " 0\n";
}

// Primal triangles plus the dual skeleton in one grid: circumcenters joined
// across interior edges, circumcenter-to-midpoint segments on the boundary.
// point_kind distinguishes primal vertices (0), circumcenters (1) and
// boundary-edge midpoints (2).
inline void write_dual_vtk(const TriangleMesh& mesh, const DualMetrics& metrics,
                           std::ostream& out) {
    const std::size_t nv = mesh.num_vertices();
    const std::size_t nt = mesh.num_triangles();
    const std::size_t nb = mesh.boundary_edges.size();

    out << "# vtk DataFile Version 3.0\ndec2d dual mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << nv + nt + nb << " double\n";
    for (const Point2& p : mesh.vertices) out << detail::g17(p.x) << ' ' << detail::g17(p.y) << " 0\n";
    for (const Point2& p : metrics.circumcenters)
        out << detail::g17(p.x) << ' ' << detail::g17(p.y) << " 0\n";
    std::vector<int> midpoint_index(mesh.num_edges(), -1);
    {
        std::size_t next = nv + nt;
        for (int e : mesh.boundary_edges) {
            const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
            const Point2 m = midpoint(mesh.point(ed[0]), mesh.point(ed[1]));
            out << detail::g17(m.x) << ' ' << detail::g17(m.y) << " 0\n";
            midpoint_index[static_cast<std::size_t>(e)] = static_cast<int>(next++);
        }
    }

    const std::size_t ncells = nt + mesh.num_edges();
    out << "CELLS " << ncells << ' ' << 4 * nt + 3 * mesh.num_edges() << '\n';
    for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        const auto& tris = mesh.edge_triangles[e];
        const int a = static_cast<int>(nv) + tris[0];
        const int b = tris[1] >= 0 ? static_cast<int>(nv) + tris[1] : midpoint_index[e];
        out << "2 " << a << ' ' << b << '\n';
    }
    out << "CELL_TYPES " << ncells << '\n';
    for (std::size_t t = 0; t < nt; ++t) out << "5\n";
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) out << "3\n";

    out << "POINT_DATA " << nv + nt + nb << '\n';
    out << "SCALARS point_kind int 1\nLOOKUP_TABLE default\n";
    for (std::size_t i = 0; i < nv; ++i) out << "0\n";
    for (std::size_t i = 0; i < nt; ++i) out << "1\n";
    for (std::size_t i = 0; i < nb; ++i) out << "2\n";
}

inline void write_dual_edges_csv(const TriangleMesh& mesh, const DualMetrics& metrics,
                                 std::ostream& out) {
    out << "edge,primal_length,signed_dual_length\n";
    for (std::size_t e = 0; e < mesh.num_edges(); ++e)
        out << e << ',' << detail::g17(mesh.primal_edge_length(static_cast<int>(e))) << ','
            << detail::g17(metrics.dual_edge_length[e]) << '\n';
}

inline void write_dual_vertices_csv(const TriangleMesh& mesh, const DualMetrics& metrics,
                                    std::ostream& out) {
    out << "vertex,signed_dual_area\n";
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        out << v << ',' << detail::g17(metrics.dual_vertex_area[v]) << '\n';
}

inline void write_samples_csv(const std::vector<LineSample>& samples, std::ostream& out) {
    out << "t,x,y,value\n";
    for (const LineSample& s : samples) {
        out << detail::g17(s.t) << ',' << detail::g17(s.position.x) << ','
            << detail::g17(s.position.y) << ',';
        if (s.inside) out << detail::g17(s.value);
        out << '\n'; // gap rows leave the value column empty
    }
}

inline void write_compare_csv(const std::vector<CompareRow>& rows, std::ostream& out) {
    out << "rings,nodes,elements,dec_max_temp,fem_max_temp,dec_max_flux,fem_max_flux\n";
    for (const CompareRow& r : rows)
        out << r.rings << ',' << r.nodes << ',' << r.elements << ',' << detail::g17(r.dec_max_temp)
            << ',' << detail::g17(r.fem_max_temp) << ',' << detail::g17(r.dec_max_flux) << ','
            << detail::g17(r.fem_max_flux) << '\n';
}

inline void write_compare_text(const std::vector<CompareRow>& rows, std::ostream& out) {
    out << std::left << std::setw(7) << "rings" << std::setw(9) << "nodes" << std::setw(10)
        << "elements" << std::setw(14) << "dec_max_temp" << std::setw(14) << "fem_max_temp"
        << std::setw(14) << "dec_max_flux" << std::setw(14) << "fem_max_flux" << '\n';
    for (const CompareRow& r : rows)
        out << std::left << std::setw(7) << r.rings << std::setw(9) << r.nodes << std::setw(10)
            << r.elements << std::setw(14) << detail::g6(r.dec_max_temp) << std::setw(14)
            << detail::g6(r.fem_max_temp) << std::setw(14) << detail::g6(r.dec_max_flux)
            << std::setw(14) << detail::g6(r.fem_max_flux) << '\n';
}

inline void write_convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
    out << "rings,h,nodes,dec_linf,dec_l2,dec_order,fem_linf,fem_l2,fem_order\n";
    for (const ConvergenceRow& r : rows)
        out << r.rings << ',' << detail::g17(r.h) << ',' << r.nodes << ','
            << detail::g17(r.dec_linf) << ',' << detail::g17(r.dec_l2) << ','
            << detail::g17(r.dec_order) << ',' << detail::g17(r.fem_linf) << ','
            << detail::g17(r.fem_l2) << ',' << detail::g17(r.fem_order) << '\n';
}

} // namespace dec2d
