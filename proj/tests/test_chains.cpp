#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <sstream>
#include <vector>

#include "dec2d/incidence.hpp"
#include "support/hexagon_reference.hpp"
#include "support/test_meshes.hpp"

using dec2d::IncidenceMatrix;
using dec2d::TriangleMesh;
using testsupport::hex_reference_cols;
using testsupport::hex_reference_edge_map;
using testsupport::hex_reference_rows;
using testsupport::kHexBoundary10;
using testsupport::kHexBoundary21;

TEST_CASE("single triangle boundary column") {
    const TriangleMesh mesh = testsupport::unit_right_triangle();
    const IncidenceMatrix b21 = dec2d::boundary_2_1(mesh);
    REQUIRE(b21.rows == 3);
    REQUIRE(b21.cols == 1);
    // canonical edges [0,1], [0,2], [1,2]
    CHECK(b21.dense() == std::vector<int>{1, -1, 1});

    CHECK(b21.role == dec2d::IncidenceRole::Boundary21);
    CHECK(dec2d::boundary_1_0(mesh).role == dec2d::IncidenceRole::Boundary10);
    CHECK(dec2d::derivative_0_1(mesh).role == dec2d::IncidenceRole::Derivative01);
    CHECK(dec2d::dual_boundary_2_1(mesh).role == dec2d::IncidenceRole::DualBoundary21);
}

TEST_CASE("hexagon boundary operators match the reference matrices exactly") {
    const TriangleMesh mesh = testsupport::hexagon_mesh();
    const auto map = hex_reference_edge_map(mesh);

    const IncidenceMatrix b21 = dec2d::boundary_2_1(mesh);
    REQUIRE(b21.rows == 12);
    REQUIRE(b21.cols == 6);
    CHECK(hex_reference_rows(b21, map) == kHexBoundary21);

    const IncidenceMatrix b10 = dec2d::boundary_1_0(mesh);
    REQUIRE(b10.rows == 7);
    REQUIRE(b10.cols == 12);
    CHECK(hex_reference_cols(b10, map) == kHexBoundary10);
}

TEST_CASE("hexagon derivative and dual boundary in the reference basis") {
    const TriangleMesh mesh = testsupport::hexagon_mesh();
    const auto map = hex_reference_edge_map(mesh);

    // derivative = transpose of boundary_1_0
    const IncidenceMatrix d01 = dec2d::derivative_0_1(mesh);
    const std::vector<int> d01_ref = hex_reference_rows(d01, map);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 12; ++c)
            CHECK(kHexBoundary10[r * 12 + c] == d01_ref[c * 7 + r]);

    // dual boundary = -(boundary_1_0)^T; dual face column of the interior
    // vertex v6 is minus the indicator of the six spoke edges
    const IncidenceMatrix dual = dec2d::dual_boundary_2_1(mesh);
    REQUIRE(dual.rows == 12);
    REQUIRE(dual.cols == 7);
    const std::vector<int> dual_ref = hex_reference_rows(dual, map);
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 0; c < 7; ++c)
            CHECK(dual_ref[r * 7 + c] == -kHexBoundary10[c * 12 + r]);
    for (std::size_t r = 0; r < 12; ++r)
        CHECK(dual_ref[r * 7 + 6] == (r < 6 ? -1 : 0));
}

TEST_CASE("operator structure on arbitrary meshes") {
    for (unsigned seed : {0u, 1u, 2u, 3u}) {
        const TriangleMesh mesh = seed == 0 ? testsupport::hexagon_mesh()
                                            : testsupport::perturbed_disk(3, seed);
        const IncidenceMatrix b21 = dec2d::boundary_2_1(mesh);
        const IncidenceMatrix b10 = dec2d::boundary_1_0(mesh);

        // entries are +-1 only, with fixed per-column counts
        std::vector<int> col_count21(b21.cols, 0), col_count10(b10.cols, 0),
            col_sum10(b10.cols, 0);
        for (const auto& e : b21.entries) {
            CHECK((e.value == 1 || e.value == -1));
            ++col_count21[static_cast<std::size_t>(e.col)];
        }
        for (const auto& e : b10.entries) {
            CHECK((e.value == 1 || e.value == -1));
            ++col_count10[static_cast<std::size_t>(e.col)];
            col_sum10[static_cast<std::size_t>(e.col)] += e.value;
        }
        for (int c : col_count21) CHECK(c == 3);
        for (int c : col_count10) CHECK(c == 2);
        for (int s : col_sum10) CHECK(s == 0);

        // boundary of boundary vanishes, in integers
        const std::vector<long long> product = dec2d::multiply_dense(b10, b21);
        for (long long v : product) CHECK(v == 0);

        // transpose duality, entry for entry
        const IncidenceMatrix d01 = dec2d::derivative_0_1(mesh);
        const IncidenceMatrix dual = dec2d::dual_boundary_2_1(mesh);
        const std::vector<int> dense10 = b10.dense();
        const std::vector<int> dense01 = d01.dense();
        const std::vector<int> dense_dual = dual.dense();
        REQUIRE(d01.rows == b10.cols);
        for (std::size_t r = 0; r < b10.rows; ++r)
            for (std::size_t c = 0; c < b10.cols; ++c) {
                CHECK(dense10[r * b10.cols + c] == dense01[c * d01.cols + r]);
                CHECK(dense10[r * b10.cols + c] + dense_dual[c * dual.cols + r] == 0);
            }

        // a constant is in the kernel of the derivative
        const std::vector<int> d01_dense = d01.dense();
        for (std::size_t r = 0; r < d01.rows; ++r) {
            int row_sum = 0;
            for (std::size_t c = 0; c < d01.cols; ++c) row_sum += d01_dense[r * d01.cols + c];
            CHECK(row_sum == 0);
        }
    }
}

TEST_CASE("matrix market dump of an incidence matrix") {
    const TriangleMesh mesh = testsupport::unit_right_triangle();
    std::ostringstream out;
    dec2d::write_matrix_market(dec2d::boundary_2_1(mesh), out);
    CHECK(out.str() ==
          "%%MatrixMarket matrix coordinate integer general\n"
          "3 1 3\n"
          "1 1 1\n"
          "2 1 -1\n"
          "3 1 1\n");
}
