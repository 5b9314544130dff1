#pragma once

// Reference P1 finite element solver sharing the mesh, boundary-condition
// handling, linear solver and flux pipeline with the main solver, so the two
// discretizations differ only where the methods themselves differ: the
// stiffness matrices coincide entrywise, the load vector uses a lumped mass
// (one third of the incident triangle area per vertex) instead of dual cell
// areas.

#include <vector>

#include "dec2d/mesh.hpp"
#include "dec2d/poisson.hpp"
#include "dec2d/sparse.hpp"

namespace dec2d {

// Assembled P1 stiffness: per element kappa * area * grad(phi_i).grad(phi_j).
inline SparseMatrix p1_stiffness(const TriangleMesh& mesh, double kappa) {
    std::vector<Triplet> triplets;
    triplets.reserve(mesh.num_triangles() * 9);
    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const Point2 a = mesh.point(t[0]), b = mesh.point(t[1]), c = mesh.point(t[2]);
        const double twice_area = cross(b - a, c - a);
        // hat-function gradients: opposite edge rotated by -90 deg / 2A
        const Point2 grad[3] = {{(b.y - c.y) / twice_area, (c.x - b.x) / twice_area},
                                {(c.y - a.y) / twice_area, (a.x - c.x) / twice_area},
                                {(a.y - b.y) / twice_area, (b.x - a.x) / twice_area}};
        const double area = 0.5 * twice_area;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                triplets.push_back({t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)],
                                    kappa * area *
                                        dot(grad[static_cast<std::size_t>(i)],
                                            grad[static_cast<std::size_t>(j)])});
    }
    return from_triplets(mesh.num_vertices(), mesh.num_vertices(), std::move(triplets));
}

// Lumped-mass load vector plus the same Neumann terms as the DEC pipeline.
inline DenseVector p1_load(const TriangleMesh& mesh, const std::vector<double>& source,
                           const std::map<int, double>& neumann) {
    PoissonProblem shim;
    shim.neumann = neumann;
    DenseVector b = detail::neumann_contributions(mesh, shim);
    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
        const double third = signed_area(mesh, static_cast<int>(ti)) / 3.0;
        for (int v : mesh.triangles[ti])
            b[static_cast<std::size_t>(v)] -= third * source[static_cast<std::size_t>(v)];
    }
    return b;
}

inline SolveReport solve_fem(const TriangleMesh& mesh, const PoissonProblem& problem,
                             const SolverOptions& opts = {}) {
    validate_problem(mesh, problem);
    const SparseMatrix k = p1_stiffness(mesh, problem.kappa);
    DenseVector b = p1_load(mesh, problem.source, problem.neumann);
    AssembledSystem system = detail::apply_dirichlet(mesh, problem, k, std::move(b));
    return detail::solve_system_and_report(mesh, problem, std::move(system), opts);
}

} // namespace dec2d
