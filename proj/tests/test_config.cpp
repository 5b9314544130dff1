#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dec2d/config.hpp"
#include "dec2d/disk_mesh.hpp"
#include "support/test_meshes.hpp"

using dec2d::ProblemConfig;
using Catch::Matchers::WithinRel;

TEST_CASE("config parsing") {
    const ProblemConfig config = dec2d::parse_problem_config(
        "# heat run\n"
        "kappa = 80.2\n"
        "source = 20.2   # uniform\n"
        "dirichlet = outer:10\n"
        "neumann = 2:100\n");
    CHECK(config.kappa == 80.2);
    CHECK(config.source_constant == 20.2);
    CHECK(config.source_path.empty());
    REQUIRE(config.dirichlet.size() == 1);
    CHECK(config.dirichlet[0] == std::pair<int, double>{1, 10.0});
    REQUIRE(config.neumann.size() == 1);
    CHECK(config.neumann[0] == std::pair<int, double>{2, 100.0});
}

TEST_CASE("config accepts multiple pairs and csv sources") {
    const ProblemConfig config = dec2d::parse_problem_config(
        "source = fields/source.csv\n"
        "dirichlet = 1:10, 3:-2.5\n");
    CHECK(config.source_path == "fields/source.csv");
    REQUIRE(config.dirichlet.size() == 2);
    CHECK(config.dirichlet[1] == std::pair<int, double>{3, -2.5});
}

TEST_CASE("config errors") {
    using dec2d::ConfigError;
    CHECK_THROWS_AS(dec2d::parse_problem_config("kappa 1\n"), ConfigError);
    CHECK_THROWS_AS(dec2d::parse_problem_config("kappa = abc\n"), ConfigError);
    CHECK_THROWS_AS(dec2d::parse_problem_config("dirichlet = 10\n"), ConfigError);
    CHECK_THROWS_AS(dec2d::parse_problem_config("dirichlet = edge:10\n"), ConfigError);
    CHECK_THROWS_AS(dec2d::parse_problem_config("mystery = 1\n"), ConfigError);
}

TEST_CASE("marker resolution against a mesh") {
    const dec2d::TriangleMesh mesh = testsupport::annulus_mesh(0.5, 1.0, 3, 16);
    ProblemConfig config;
    config.kappa = 2.0;
    config.source_constant = -1.0;
    config.dirichlet = {{1, 10.0}};
    config.neumann = {{2, 100.0}};
    const dec2d::PoissonProblem problem = dec2d::make_problem(mesh, config);

    CHECK(problem.dirichlet.size() == 16); // the outer ring
    for (const auto& [v, value] : problem.dirichlet) {
        CHECK(mesh.vertex_markers[static_cast<std::size_t>(v)] == 1);
        CHECK(value == 10.0);
    }
    CHECK(problem.neumann.size() == 16); // the inner ring edges
    for (const auto& [e, value] : problem.neumann) {
        CHECK(mesh.edge_on_boundary[static_cast<std::size_t>(e)]);
        CHECK(value == 100.0);
    }

    ProblemConfig missing = config;
    missing.dirichlet = {{7, 1.0}};
    CHECK_THROWS_AS(dec2d::make_problem(mesh, missing), dec2d::ConfigError);

    // a repeated marker is not an error; the later value wins
    ProblemConfig repeated = config;
    repeated.neumann = {{2, 100.0}, {2, 50.0}};
    const dec2d::PoissonProblem overwritten = dec2d::make_problem(mesh, repeated);
    for (const auto& [e, value] : overwritten.neumann) CHECK(value == 50.0);
}

TEST_CASE("per-vertex source csv") {
    const dec2d::TriangleMesh mesh = dec2d::gen_disk_mesh(1);
    const auto path = std::filesystem::temp_directory_path() / "dec2d_source_test.csv";
    {
        std::ofstream out(path);
        out << "# one value per vertex\n";
        for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
            out << v << "," << static_cast<double>(v) * 0.5 << "\n";
    }
    ProblemConfig config;
    config.source_path = path.string();
    config.dirichlet = {{1, 0.0}};
    const dec2d::PoissonProblem problem = dec2d::make_problem(mesh, config);
    REQUIRE(problem.source.size() == mesh.num_vertices());
    CHECK_THAT(problem.source[4], WithinRel(2.0, 1e-15));

    {
        std::ofstream out(path);
        out << "1\n2\n";
    }
    CHECK_THROWS_AS(dec2d::make_problem(mesh, config), dec2d::ConfigError);
    std::filesystem::remove(path);
}
