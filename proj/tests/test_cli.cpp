#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dec2d/mesh_io.hpp"
#include "support/test_meshes.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "dec2d_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const fs::path out_file = work_dir() / "cli_output.txt";
    std::string command = "cd " + work_dir().string() + " && " + env + " " + DEC2D_CLI_PATH + " " +
                          args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen-disk writes loadable meshes") {
    const CliResult r = run_cli("gen-disk --rings 2 --out disk2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("25 nodes, 32 elements") != std::string::npos);
    const dec2d::TriangleMesh mesh = dec2d::load_mesh_files((work_dir() / "disk2.node").string(),
                                                            (work_dir() / "disk2.ele").string());
    CHECK(mesh.num_vertices() == 25);
    CHECK(mesh.num_triangles() == 32);
}

TEST_CASE("solve reports both methods on the benchmark disk") {
    const CliResult r = run_cli(
        "solve --gen-disk 4 --kappa 1 --source -1 --dirichlet outer:10 --method both --out run4");
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("[dec]") != std::string::npos);
    CHECK(r.output.find("[fem]") != std::string::npos);
    CHECK(r.output.find("max_temp=10.25") != std::string::npos);
    CHECK(fs::exists(work_dir() / "run4.dec.csv"));
    CHECK(fs::exists(work_dir() / "run4.dec.vtk"));
    CHECK(fs::exists(work_dir() / "run4.fem.csv"));
    CHECK(fs::exists(work_dir() / "run4.summary.txt"));

    const std::string vtk = slurp(work_dir() / "run4.dec.vtk");
    CHECK(vtk.rfind("# vtk DataFile Version 3.0", 0) == 0);
    CHECK(vtk.find("SCALARS u double 1") != std::string::npos);
    CHECK(vtk.find("SCALARS flux_magnitude double 1") != std::string::npos);
    CHECK(vtk.find("VECTORS flux double") != std::string::npos);
}

TEST_CASE("identical configurations give byte-identical outputs") {
    REQUIRE(run_cli("solve --gen-disk 3 --source -1 --dirichlet outer:10 --out det_a").exit_code == 0);
    REQUIRE(run_cli("solve --gen-disk 3 --source -1 --dirichlet outer:10 --out det_b").exit_code == 0);
    CHECK(slurp(work_dir() / "det_a.dec.csv") == slurp(work_dir() / "det_b.dec.csv"));
    CHECK(slurp(work_dir() / "det_a.dec.vtk") == slurp(work_dir() / "det_b.dec.vtk"));

    // a thread cap must not change the numbers
    REQUIRE(run_cli("solve --gen-disk 3 --source -1 --dirichlet outer:10 --out det_c",
                    "DEC2D_THREADS=4").exit_code == 0);
    CHECK(slurp(work_dir() / "det_a.dec.csv") == slurp(work_dir() / "det_c.dec.csv"));

    // also on a mesh big enough (2401 vertices) to engage the threaded path
    REQUIRE(run_cli("solve --gen-disk 24 --source -1 --dirichlet outer:10 --out big_a").exit_code == 0);
    REQUIRE(run_cli("solve --gen-disk 24 --source -1 --dirichlet outer:10 --out big_b",
                    "DEC2D_THREADS=4").exit_code == 0);
    CHECK(slurp(work_dir() / "big_a.dec.csv") == slurp(work_dir() / "big_b.dec.csv"));
}

TEST_CASE("config file driven solve") {
    {
        std::ofstream cfg(work_dir() / "problem.cfg");
        cfg << "kappa = 1\nsource = -1\ndirichlet = outer:10\n";
    }
    const CliResult r = run_cli("solve --gen-disk 2 --config problem.cfg");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("max_temp=10.25") != std::string::npos);
}

TEST_CASE("missing files and bad flags exit with code 2") {
    const CliResult missing = run_cli("solve --node nope.node --ele nope.ele --dirichlet 1:0");
    CHECK(missing.exit_code == 2);
    CHECK(missing.output.find("nope.node") != std::string::npos);

    REQUIRE(run_cli("gen-disk --rings 1 --out lonely").exit_code == 0);
    const CliResult missing_ele =
        run_cli("solve --node lonely.node --ele lonely.missing --dirichlet outer:10");
    CHECK(missing_ele.exit_code == 2);
    CHECK(missing_ele.output.find("lonely.missing") != std::string::npos);

    CHECK(run_cli("solve --gen-disk 2").exit_code == 2);               // no Dirichlet
    CHECK(run_cli("compare --rings , ").exit_code == 2);               // empty rings list
    CHECK(run_cli("solve --gen-disk 2 --method magic").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("compare emits the table and csv") {
    const CliResult r = run_cli("compare --rings 1,2,4 --out cmp");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("dec_max_temp") != std::string::npos);
    const std::string csv = slurp(work_dir() / "cmp.csv");
    CHECK(csv.find("rings,nodes,elements,dec_max_temp") == 0);
    // three data rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("dual export on the hexagon") {
    const dec2d::TriangleMesh hex = testsupport::hexagon_mesh();
    dec2d::save_mesh_files(hex, (work_dir() / "hex.node").string(),
                           (work_dir() / "hex.ele").string());
    const CliResult r = run_cli("dual --node hex.node --ele hex.ele --out hexdual");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("6 dual vertices") != std::string::npos);
    CHECK(r.output.find("12 dual edge records") != std::string::npos);

    const std::string edges = slurp(work_dir() / "hexdual_edges.csv");
    CHECK(std::count(edges.begin(), edges.end(), '\n') == 13); // header + 12
    const std::string verts = slurp(work_dir() / "hexdual_vertices.csv");
    CHECK(std::count(verts.begin(), verts.end(), '\n') == 8); // header + 7

    // grid holds 7 primal + 6 circumcenter + 6 midpoint points, and
    // 6 triangles + 12 dual edge cells
    const std::string vtk = slurp(work_dir() / "hexdual.vtk");
    CHECK(vtk.find("POINTS 19 double") != std::string::npos);
    CHECK(vtk.find("CELLS 18 ") != std::string::npos);
    CHECK(vtk.find("SCALARS point_kind int 1") != std::string::npos);
}

TEST_CASE("convergence study emits orders") {
    const CliResult r = run_cli("convergence --rings 2,4,8 --out conv.csv");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(work_dir() / "conv.csv");
    CHECK(csv.find("rings,h,nodes,dec_linf,dec_l2,dec_order,fem_linf,fem_l2,fem_order") == 0);

    // the FEM error column should show second-order decay by the last row
    std::istringstream in(csv);
    std::string line, last;
    std::getline(in, line); // header
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    std::vector<std::string> fields;
    std::istringstream ls(last);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 9);
    CHECK(std::stod(fields[8]) > 1.5); // fem_order
}

TEST_CASE("mixed-boundary problem on user geometry via config file") {
    const dec2d::TriangleMesh annulus = testsupport::annulus_mesh(0.25, 1.0, 6, 32);
    dec2d::save_mesh_files(annulus, (work_dir() / "ring.node").string(),
                           (work_dir() / "ring.ele").string());
    {
        std::ofstream cfg(work_dir() / "ring.cfg");
        cfg << "kappa = 80.2\nsource = 20.2\ndirichlet = outer:10\nneumann = 2:100\n";
    }
    const CliResult r =
        run_cli("solve --node ring.node --ele ring.ele --config ring.cfg --method both --out ring");
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("[dec]") != std::string::npos);
    CHECK(r.output.find("[fem]") != std::string::npos);

    // the flux-fed inner rim must be the warm side, and both methods agree
    // on the field's range to table precision
    const std::string csv = slurp(work_dir() / "ring.dec.csv");
    double inner_u = 0.0, outer_u = 0.0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string vertex, x, y, u, flux;
        std::getline(ls, vertex, ',');
        std::getline(ls, x, ',');
        std::getline(ls, y, ',');
        std::getline(ls, u, ',');
        const double r2 = std::stod(x) * std::stod(x) + std::stod(y) * std::stod(y);
        if (std::abs(r2 - 0.0625) < 1e-9) inner_u = std::stod(u);
        if (std::abs(r2 - 1.0) < 1e-9) outer_u = std::stod(u);
    }
    CHECK(outer_u == 10.0);
    CHECK(inner_u > 10.0);
}

TEST_CASE("line sampling the disk diameter") {
    const CliResult r = run_cli(
        "sample --gen-disk 2 --source -1 --dirichlet outer:10 --from -1,0 --to 1,0 "
        "--samples 9 --out diam.csv");
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(work_dir() / "diam.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,x,y,value");
    double peak = 0.0;
    while (std::getline(in, line)) {
        const std::size_t last_comma = line.rfind(',');
        REQUIRE(last_comma != std::string::npos);
        peak = std::max(peak, std::stod(line.substr(last_comma + 1)));
    }
    CHECK_THAT(peak, Catch::Matchers::WithinAbs(10.25, 1e-9));
}
