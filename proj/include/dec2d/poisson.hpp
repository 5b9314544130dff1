#pragma once

// Poisson solver on the primal/dual mesh pair.
//
// The operator is assembled as K = kappa * d0^T M11 d0, where d0 is the
// edge-vertex derivative and M11 the diagonal edge Hodge star; the right
// hand side is b = -M02 q plus Neumann terms. With this sign choice K is
// positive semidefinite before constraints (weights permitting) and a
// negative uniform source produces a positive interior bump. Dirichlet
// constraints are eliminated symmetrically: constrained rows/columns are
// removed, known values moved to the right hand side, and a unit diagonal
// left in place, so conjugate gradient stays applicable.
//
// A Neumann boundary edge with flux density h contributes h*length/2 to
// both endpoint rows, i.e. h integrated over each vertex's half of the edge.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "dec2d/dual.hpp"
#include "dec2d/hodge.hpp"
#include "dec2d/incidence.hpp"
#include "dec2d/mesh.hpp"
#include "dec2d/solve.hpp"
#include "dec2d/sparse.hpp"

namespace dec2d {

struct PoissonProblem {
    double kappa = 1.0;
    std::vector<double> source;      // q at vertices
    std::map<int, double> dirichlet; // vertex -> prescribed value
    std::map<int, double> neumann;   // boundary edge -> flux density

    static PoissonProblem uniform(const TriangleMesh& mesh, double kappa, double q) {
        PoissonProblem p;
        p.kappa = kappa;
        p.source.assign(mesh.num_vertices(), q);
        return p;
    }
};

// Dirichlet value on every boundary vertex carrying the given marker;
// returns how many vertices matched.
inline std::size_t dirichlet_on_marker(const TriangleMesh& mesh, PoissonProblem& problem,
                                       int marker, double value) {
    std::size_t matched = 0;
    for (int v : mesh.boundary_vertices)
        if (mesh.vertex_markers[static_cast<std::size_t>(v)] == marker) {
            problem.dirichlet[v] = value;
            ++matched;
        }
    return matched;
}

// Neumann flux density on every boundary edge whose endpoints both carry
// the given marker; returns how many edges matched.
inline std::size_t neumann_on_marker(const TriangleMesh& mesh, PoissonProblem& problem, int marker,
                                     double value) {
    std::size_t matched = 0;
    for (int e : mesh.boundary_edges) {
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        if (mesh.vertex_markers[static_cast<std::size_t>(ed[0])] == marker &&
            mesh.vertex_markers[static_cast<std::size_t>(ed[1])] == marker) {
            problem.neumann[e] = value;
            ++matched;
        }
    }
    return matched;
}

inline void validate_problem(const TriangleMesh& mesh, const PoissonProblem& problem) {
    if (!(problem.kappa > 0.0)) throw MeshError("kappa must be positive");
    if (problem.source.size() != mesh.num_vertices())
        throw MeshError("source vector length does not match vertex count");
    for (double q : problem.source)
        if (!std::isfinite(q)) throw MeshError("non-finite source value");
    if (problem.dirichlet.empty())
        throw MeshError("problem needs at least one Dirichlet vertex (pure-Neumann systems are singular)");
    for (const auto& [v, value] : problem.dirichlet) {
        if (v < 0 || static_cast<std::size_t>(v) >= mesh.num_vertices())
            throw MeshError("Dirichlet vertex " + std::to_string(v) + " out of range");
        if (!std::isfinite(value)) throw MeshError("non-finite Dirichlet value");
    }
    for (const auto& [e, value] : problem.neumann) {
        if (e < 0 || static_cast<std::size_t>(e) >= mesh.num_edges())
            throw MeshError("Neumann edge " + std::to_string(e) + " out of range");
        if (!mesh.edge_on_boundary[static_cast<std::size_t>(e)])
            throw MeshError("Neumann edge " + std::to_string(e) + " is not a boundary edge");
        if (!std::isfinite(value)) throw MeshError("non-finite Neumann value");
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        if (problem.dirichlet.count(ed[0]) && problem.dirichlet.count(ed[1]))
            throw MeshError("edge " + std::to_string(e) +
                            " has a Neumann flux but both endpoints are Dirichlet-constrained");
    }
}

struct AssembledSystem {
    SparseMatrix matrix;
    DenseVector rhs;
};

namespace detail {

// Shared by the DEC and FEM pipelines: h * len/2 into both endpoint rows.
inline DenseVector neumann_contributions(const TriangleMesh& mesh, const PoissonProblem& problem) {
    DenseVector b(mesh.num_vertices(), 0.0);
    for (const auto& [e, h] : problem.neumann) {
        const double half = 0.5 * h * mesh.primal_edge_length(e);
        const auto& ed = mesh.edges[static_cast<std::size_t>(e)];
        b[static_cast<std::size_t>(ed[0])] += half;
        b[static_cast<std::size_t>(ed[1])] += half;
    }
    return b;
}

// Symmetric Dirichlet elimination on an assembled (matrix, rhs) pair.
inline AssembledSystem apply_dirichlet(const TriangleMesh& mesh, const PoissonProblem& problem,
                                       const SparseMatrix& k, DenseVector b) {
    std::vector<std::uint8_t> constrained(mesh.num_vertices(), 0);
    std::vector<double> value(mesh.num_vertices(), 0.0);
    for (const auto& [v, g] : problem.dirichlet) {
        constrained[static_cast<std::size_t>(v)] = 1;
        value[static_cast<std::size_t>(v)] = g;
    }

    std::vector<Triplet> triplets;
    triplets.reserve(k.nnz());
    for (std::size_t r = 0; r < k.rows; ++r) {
        if (constrained[r]) continue;
        for (std::size_t idx = k.row_offsets[r]; idx < k.row_offsets[r + 1]; ++idx) {
            const std::size_t c = static_cast<std::size_t>(k.col_indices[idx]);
            if (constrained[c])
                b[r] -= k.values[idx] * value[c];
            else
                triplets.push_back({static_cast<int>(r), static_cast<int>(c), k.values[idx]});
        }
    }
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        if (constrained[v]) {
            triplets.push_back({static_cast<int>(v), static_cast<int>(v), 1.0});
            b[v] = value[v];
        }

    return {from_triplets(k.rows, k.cols, std::move(triplets)), std::move(b)};
}

} // namespace detail

// DEC stiffness matrix before boundary conditions: kappa * d0^T M11 d0.
inline SparseMatrix dec_stiffness(const TriangleMesh& mesh, const DualMetrics& metrics,
                                  double kappa) {
    const SparseMatrix d0 = from_incidence(derivative_0_1(mesh));
    DiagonalOperator m11 = hodge_1_1(mesh, metrics);
    for (double& d : m11.diagonal) d *= kappa;
    return triple_product(d0, m11, d0);
}

inline AssembledSystem assemble(const TriangleMesh& mesh, const DualMetrics& metrics,
                                const PoissonProblem& problem) {
    validate_problem(mesh, problem);
    const SparseMatrix k = dec_stiffness(mesh, metrics, problem.kappa);
    const DiagonalOperator m02 = hodge_0_2(mesh, metrics);
    DenseVector b = detail::neumann_contributions(mesh, problem);
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        b[v] -= m02.diagonal[v] * problem.source[v];
    return detail::apply_dirichlet(mesh, problem, k, std::move(b));
}

struct FluxField {
    std::vector<Point2> per_triangle;      // -kappa * gradient of the linear interpolant
    std::vector<double> vertex_magnitude;  // |area-weighted average of incident fluxes|
};

inline FluxField flux_field(const TriangleMesh& mesh, const DenseVector& solution, double kappa) {
    if (solution.size() != mesh.num_vertices())
        throw std::invalid_argument("flux_field: solution length mismatch");
    FluxField f;
    f.per_triangle.resize(mesh.num_triangles());
    std::vector<Point2> weighted(mesh.num_vertices(), Point2{0.0, 0.0});
    std::vector<double> weight(mesh.num_vertices(), 0.0);

    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
        const auto& t = mesh.triangles[ti];
        const Point2 a = mesh.point(t[0]), b = mesh.point(t[1]), c = mesh.point(t[2]);
        const double ua = solution[static_cast<std::size_t>(t[0])];
        const double ub = solution[static_cast<std::size_t>(t[1])];
        const double uc = solution[static_cast<std::size_t>(t[2])];
        const double twice_area = cross(b - a, c - a);
        // gradient of the P1 interpolant: sum of nodal values times rotated
        // opposite-edge vectors
        const Point2 grad = (1.0 / twice_area) *
                            Point2{ua * (b.y - c.y) + ub * (c.y - a.y) + uc * (a.y - b.y),
                                   ua * (c.x - b.x) + ub * (a.x - c.x) + uc * (b.x - a.x)};
        const Point2 flux = -kappa * grad;
        f.per_triangle[ti] = flux;
        const double area = 0.5 * twice_area;
        for (int v : t) {
            weighted[static_cast<std::size_t>(v)] = weighted[static_cast<std::size_t>(v)] + area * flux;
            weight[static_cast<std::size_t>(v)] += area;
        }
    }
    f.vertex_magnitude.resize(mesh.num_vertices());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        f.vertex_magnitude[v] = norm((1.0 / weight[v]) * weighted[v]);
    return f;
}

struct SolveReport {
    DenseVector solution;                 // per vertex
    std::vector<Point2> flux_per_triangle;
    std::vector<double> flux_magnitude_per_vertex;
    std::size_t iterations = 0;
    double residual = 0.0;
    double min_solution = 0.0;
    double max_solution = 0.0;
    double max_flux_magnitude = 0.0;
    bool lu_fallback_used = false;
};

namespace detail {

inline SolveReport solve_system_and_report(const TriangleMesh& mesh, const PoissonProblem& problem,
                                           AssembledSystem system, const SolverOptions& opts) {
    SolveReport report;
    CgResult cg = cg_solve(system.matrix, system.rhs, opts);
    if (cg.status == CgStatus::Converged) {
        report.solution = std::move(cg.x);
        report.iterations = cg.iterations;
    } else if (opts.lu_fallback && system.matrix.rows <= 2000) {
        report.solution = lu_solve(system.matrix, system.rhs);
        report.iterations = cg.iterations;
        report.lu_fallback_used = true;
    } else {
        throw SolveError(cg.status == CgStatus::Breakdown
                             ? "conjugate gradient breakdown: system is not positive definite"
                             : "conjugate gradient did not converge",
                         cg.iterations, cg.residual);
    }

    // Constrained entries are pinned to their prescribed values (the solver
    // only reaches them to tolerance), then the residual reflects the final
    // vector.
    for (const auto& [v, g] : problem.dirichlet) report.solution[static_cast<std::size_t>(v)] = g;
    const DenseVector ax = matvec(system.matrix, report.solution);
    double sum = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        const double d = ax[i] - system.rhs[i];
        sum += d * d;
    }
    report.residual = std::sqrt(sum);

    FluxField flux = flux_field(mesh, report.solution, problem.kappa);
    report.flux_per_triangle = std::move(flux.per_triangle);
    report.flux_magnitude_per_vertex = std::move(flux.vertex_magnitude);
    report.min_solution = *std::min_element(report.solution.begin(), report.solution.end());
    report.max_solution = *std::max_element(report.solution.begin(), report.solution.end());
    report.max_flux_magnitude = *std::max_element(report.flux_magnitude_per_vertex.begin(),
                                                  report.flux_magnitude_per_vertex.end());
    return report;
}

} // namespace detail

inline SolveReport solve_problem(const TriangleMesh& mesh, const PoissonProblem& problem,
                                 const SolverOptions& opts = {}) {
    const DualMetrics metrics = dual_metrics(mesh);
    return detail::solve_system_and_report(mesh, problem, assemble(mesh, metrics, problem), opts);
}

struct LineSample {
    double t = 0.0;
    Point2 position;
    double value = 0.0;
    bool inside = false; // false marks a gap (sample fell outside the mesh)
};

// n evenly spaced samples of the P1 field along segment [p0,p1]. Containment
// uses barycentric coordinates with a small negative slack; points in no
// triangle become gap records, not errors.
inline std::vector<LineSample> sample_line(const TriangleMesh& mesh, const DenseVector& solution,
                                           Point2 p0, Point2 p1, std::size_t n) {
    if (n < 2) throw std::invalid_argument("sample_line: need at least 2 samples");
    if (solution.size() != mesh.num_vertices())
        throw std::invalid_argument("sample_line: solution length mismatch");
    constexpr double slack = 1e-12;

    std::vector<LineSample> samples(n);
    int last_hit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        const Point2 p = p0 + t * (p1 - p0);
        LineSample s;
        s.t = t;
        s.position = p;

        const auto try_triangle = [&](int ti) {
            const auto& tri = mesh.triangles[static_cast<std::size_t>(ti)];
            const Point2 a = mesh.point(tri[0]), b = mesh.point(tri[1]), c = mesh.point(tri[2]);
            const double twice_area = cross(b - a, c - a);
            const double wa = cross(b - p, c - p) / twice_area;
            const double wb = cross(c - p, a - p) / twice_area;
            const double wc = cross(a - p, b - p) / twice_area;
            if (wa < -slack || wb < -slack || wc < -slack) return false;
            s.value = wa * solution[static_cast<std::size_t>(tri[0])] +
                      wb * solution[static_cast<std::size_t>(tri[1])] +
                      wc * solution[static_cast<std::size_t>(tri[2])];
            s.inside = true;
            return true;
        };

        if (!try_triangle(last_hit)) {
            for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti)
                if (try_triangle(static_cast<int>(ti))) {
                    last_hit = static_cast<int>(ti);
                    break;
                }
        }
        samples[i] = s;
    }
    return samples;
}

} // namespace dec2d
