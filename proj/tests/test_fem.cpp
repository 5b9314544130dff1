#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dec2d/disk_mesh.hpp"
#include "dec2d/fem.hpp"
#include "dec2d/poisson.hpp"
#include "dec2d/study.hpp"
#include "support/test_meshes.hpp"

using dec2d::PoissonProblem;
using dec2d::SolveReport;
using dec2d::SparseMatrix;
using dec2d::TriangleMesh;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

dec2d::SolverOptions tight() {
    dec2d::SolverOptions opts;
    opts.tol = 1e-13;
    return opts;
}

} // namespace

TEST_CASE("P1 element matrix of the unit right triangle") {
    const TriangleMesh mesh = testsupport::unit_right_triangle();
    const SparseMatrix k = dec2d::p1_stiffness(mesh, 1.0);
    const double expected[3][3] = {{1.0, -0.5, -0.5}, {-0.5, 0.5, 0.0}, {-0.5, 0.0, 0.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK_THAT(k.value_at(i, j), WithinAbs(expected[i][j], 1e-14));
}

TEST_CASE("P1 and circumcentric-dual stiffness coincide entrywise") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        const TriangleMesh mesh = testsupport::perturbed_disk(3, 700 + seed);
        const double kappa = 1.0 + 0.5 * seed;
        const SparseMatrix fem = dec2d::p1_stiffness(mesh, kappa);
        const SparseMatrix dec = dec2d::dec_stiffness(mesh, dec2d::dual_metrics(mesh), kappa);
        REQUIRE(fem.rows == dec.rows);
        double scale = 0.0;
        for (double v : fem.values) scale = std::max(scale, std::abs(v));
        for (std::size_t r = 0; r < fem.rows; ++r)
            for (std::size_t idx = fem.row_offsets[r]; idx < fem.row_offsets[r + 1]; ++idx)
                CHECK_THAT(dec.value_at(static_cast<int>(r), fem.col_indices[idx]),
                           WithinAbs(fem.values[idx], 1e-10 * scale));
        // and no extra entries on the other side
        CHECK(dec.nnz() <= fem.nnz());
    }
}

TEST_CASE("constants span the null space of the P1 stiffness") {
    const TriangleMesh mesh = testsupport::perturbed_disk(2, 31);
    const SparseMatrix k = dec2d::p1_stiffness(mesh, 2.0);
    const dec2d::DenseVector ones(mesh.num_vertices(), 1.0);
    for (double v : dec2d::matvec(k, ones)) CHECK_THAT(v, WithinAbs(0.0, 1e-12));
}

TEST_CASE("lumped load vector") {
    const TriangleMesh mesh = testsupport::unit_right_triangle();
    const dec2d::DenseVector b =
        dec2d::p1_load(mesh, std::vector<double>(3, -1.0), {});
    for (double v : b) CHECK_THAT(v, WithinRel(1.0 / 6.0, 1e-14));

    // lumped weights tile the mesh area
    const TriangleMesh disk = testsupport::perturbed_disk(2, 5);
    const dec2d::DenseVector w =
        dec2d::p1_load(disk, std::vector<double>(disk.num_vertices(), -1.0), {});
    double total = 0.0;
    for (double v : w) total += v;
    CHECK_THAT(total, WithinRel(dec2d::mesh_area(disk), 1e-12));
}

TEST_CASE("coarsest disk FEM value matches the closed form") {
    // one free vertex: u(0) = 10 + (2+sqrt(2))/12 with the lumped load
    const TriangleMesh mesh = dec2d::gen_disk_mesh(1);
    const SolveReport report = dec2d::solve_fem(mesh, dec2d::unit_disk_problem(mesh), tight());
    CHECK_THAT(report.solution[0], WithinAbs(10.0 + (2.0 + std::sqrt(2.0)) / 12.0, 1e-10));
    CHECK_THAT(report.max_solution, WithinAbs(10.2845, 5e-4));
}

TEST_CASE("FEM center value converges to the benchmark 10.25") {
    double prev_err = 1.0;
    for (int rings : {1, 2, 4, 8}) {
        const TriangleMesh mesh = dec2d::gen_disk_mesh(rings);
        const SolveReport report = dec2d::solve_fem(mesh, dec2d::unit_disk_problem(mesh), tight());
        const double err = std::abs(report.max_solution - 10.25);
        CHECK(err < prev_err + 1e-12);
        prev_err = err;
    }
    CHECK(prev_err < 1e-3);
}

TEST_CASE("source-free problems are solver-identical across methods") {
    const TriangleMesh mesh = testsupport::perturbed_disk(3, 77);
    PoissonProblem problem = PoissonProblem::uniform(mesh, 3.0, 0.0);
    for (int v : mesh.boundary_vertices)
        problem.dirichlet[v] = std::sin(3.0 * mesh.point(v).x) + mesh.point(v).y;
    const SolveReport dec = dec2d::solve_problem(mesh, problem, tight());
    const SolveReport fem = dec2d::solve_fem(mesh, problem, tight());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        CHECK_THAT(dec.solution[v], WithinAbs(fem.solution[v], 1e-9));
}

TEST_CASE("FEM linear exactness") {
    const auto linear = [](dec2d::Point2 p) { return 3.0 * p.x + 4.0 * p.y; };
    const TriangleMesh mesh = testsupport::perturbed_disk(3, 21);
    PoissonProblem problem = PoissonProblem::uniform(mesh, 1.0, 0.0);
    for (int v : mesh.boundary_vertices) problem.dirichlet[v] = linear(mesh.point(v));
    const SolveReport report = dec2d::solve_fem(mesh, problem, tight());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        CHECK_THAT(report.solution[v], WithinAbs(linear(mesh.vertices[v]), 1e-10));
}

TEST_CASE("FEM and DEC rim fluxes agree on a fine disk") {
    const TriangleMesh mesh = dec2d::gen_disk_mesh(8);
    const PoissonProblem problem = dec2d::unit_disk_problem(mesh);
    const SolveReport dec = dec2d::solve_problem(mesh, problem, tight());
    const SolveReport fem = dec2d::solve_fem(mesh, problem, tight());
    CHECK_THAT(fem.max_flux_magnitude, WithinAbs(dec.max_flux_magnitude, 1e-2));
}
