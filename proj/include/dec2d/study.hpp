#pragma once

// Benchmark harness on the structured disk family: the unit-disk heat
// problem (kappa=1, q=-1, boundary value 10, exact solution
// u = (1-x^2-y^2)/4 + 10), method comparison tables and nodal-error
// convergence studies.

#include <cmath>
#include <vector>

#include "dec2d/disk_mesh.hpp"
#include "dec2d/fem.hpp"
#include "dec2d/poisson.hpp"

namespace dec2d {

inline double unit_disk_exact(Point2 p) {
    return 0.25 * (1.0 - p.x * p.x - p.y * p.y) + 10.0;
}

// The benchmark boundary-value problem on a generated disk mesh.
inline PoissonProblem unit_disk_problem(const TriangleMesh& mesh) {
    PoissonProblem problem = PoissonProblem::uniform(mesh, 1.0, -1.0);
    dirichlet_on_marker(mesh, problem, 1, 10.0);
    return problem;
}

struct NodalError {
    double linf = 0.0;
    double l2 = 0.0; // root mean square over vertices
};

template <typename Exact>
inline NodalError nodal_error(const TriangleMesh& mesh, const DenseVector& solution, Exact&& exact) {
    NodalError err;
    double sum = 0.0;
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        const double d = std::abs(solution[v] - exact(mesh.vertices[v]));
        err.linf = std::max(err.linf, d);
        sum += d * d;
    }
    err.l2 = std::sqrt(sum / static_cast<double>(mesh.num_vertices()));
    return err;
}

struct CompareRow {
    int rings = 0;
    std::size_t nodes = 0;
    std::size_t elements = 0;
    double dec_max_temp = 0.0;
    double fem_max_temp = 0.0;
    double dec_max_flux = 0.0;
    double fem_max_flux = 0.0;
};

// Solves the given problem parameters on each disk refinement with both
// methods. kappa/q/boundary value parameterize the same layout as the
// benchmark problem.
inline std::vector<CompareRow> compare_disk_family(const std::vector<int>& rings_list, double kappa,
                                                   double q, double boundary_value,
                                                   const SolverOptions& opts = {}) {
    std::vector<CompareRow> rows;
    for (int rings : rings_list) {
        const TriangleMesh mesh = gen_disk_mesh(rings);
        PoissonProblem problem = PoissonProblem::uniform(mesh, kappa, q);
        dirichlet_on_marker(mesh, problem, 1, boundary_value);
        const SolveReport dec = solve_problem(mesh, problem, opts);
        const SolveReport fem = solve_fem(mesh, problem, opts);
        rows.push_back({rings, mesh.num_vertices(), mesh.num_triangles(), dec.max_solution,
                        fem.max_solution, dec.max_flux_magnitude, fem.max_flux_magnitude});
    }
    return rows;
}

struct ConvergenceRow {
    int rings = 0;
    double h = 0.0; // 1/rings
    std::size_t nodes = 0;
    double dec_linf = 0.0;
    double dec_l2 = 0.0;
    double dec_order = 0.0; // vs previous row, 0 on the first
    double fem_linf = 0.0;
    double fem_l2 = 0.0;
    double fem_order = 0.0;
};

// Nodal errors of both methods against the benchmark exact solution, with
// observed L-inf orders between successive refinements.
inline std::vector<ConvergenceRow> convergence_study(const std::vector<int>& rings_list,
                                                     const SolverOptions& opts = {}) {
    std::vector<ConvergenceRow> rows;
    for (int rings : rings_list) {
        const TriangleMesh mesh = gen_disk_mesh(rings);
        const PoissonProblem problem = unit_disk_problem(mesh);
        const SolveReport dec = solve_problem(mesh, problem, opts);
        const SolveReport fem = solve_fem(mesh, problem, opts);
        const NodalError dec_err = nodal_error(mesh, dec.solution, unit_disk_exact);
        const NodalError fem_err = nodal_error(mesh, fem.solution, unit_disk_exact);

        ConvergenceRow row;
        row.rings = rings;
        row.h = 1.0 / rings;
        row.nodes = mesh.num_vertices();
        row.dec_linf = dec_err.linf;
        row.dec_l2 = dec_err.l2;
        row.fem_linf = fem_err.linf;
        row.fem_l2 = fem_err.l2;
        if (!rows.empty()) {
            const ConvergenceRow& prev = rows.back();
            const double ratio = std::log2(prev.h / row.h);
            row.dec_order = std::log2(prev.dec_linf / row.dec_linf) / ratio;
            row.fem_order = std::log2(prev.fem_linf / row.fem_linf) / ratio;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace dec2d
