// dec2d command line: mesh generation/import, Poisson solves with either
// discretization, method comparison and convergence tables over the disk
// family, dual-mesh export, and line sampling of solved fields.
//
// Exit codes: 0 success, 1 pipeline failure, 2 configuration error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dec2d/dec2d.hpp"

namespace {

struct MeshArgs {
    std::string node_path;
    std::string ele_path;
    int gen_disk_rings = 0;
};

struct ProblemArgs {
    std::string config_path;
    std::optional<double> kappa;
    std::optional<double> source;
    std::string source_csv;
    std::string dirichlet;
    std::string neumann;
};

struct SolverArgs {
    double tol = 1e-10;
    std::size_t max_iter = 0;
    bool jacobi = false;
};

void add_mesh_options(CLI::App* cmd, MeshArgs& args) {
    cmd->add_option("--node", args.node_path, "path to a Triangle .node file");
    cmd->add_option("--ele", args.ele_path, "path to a Triangle .ele file");
    cmd->add_option("--gen-disk", args.gen_disk_rings,
                    "generate the structured unit-disk mesh with this many rings");
}

void add_problem_options(CLI::App* cmd, ProblemArgs& args) {
    cmd->add_option("--config", args.config_path, "problem configuration file (key = value)");
    cmd->add_option("--kappa", args.kappa, "diffusion constant (> 0)");
    cmd->add_option("--source", args.source, "uniform source term q");
    cmd->add_option("--source-csv", args.source_csv, "per-vertex source CSV");
    cmd->add_option("--dirichlet", args.dirichlet, "marker:value pairs, e.g. outer:10");
    cmd->add_option("--neumann", args.neumann, "marker:value pairs for boundary flux density");
}

void add_solver_options(CLI::App* cmd, SolverArgs& args) {
    cmd->add_option("--tol", args.tol, "relative solver tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", args.max_iter, "iteration cap (0 = 10n)");
    cmd->add_flag("--jacobi", args.jacobi, "enable Jacobi preconditioning");
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw dec2d::ConfigError(std::string("missing required ") + what);
    if (!std::filesystem::exists(path))
        throw dec2d::ConfigError(std::string(what) + " not found: " + path);
}

dec2d::TriangleMesh load_mesh_args(const MeshArgs& args) {
    const bool have_files = !args.node_path.empty() || !args.ele_path.empty();
    if (args.gen_disk_rings > 0 && have_files)
        throw dec2d::ConfigError("choose either --gen-disk or --node/--ele, not both");
    if (args.gen_disk_rings > 0) return dec2d::gen_disk_mesh(args.gen_disk_rings);
    if (!have_files)
        throw dec2d::ConfigError("no mesh given: use --node/--ele or --gen-disk");
    require_file(args.node_path, ".node file");
    require_file(args.ele_path, ".ele file");
    return dec2d::load_mesh_files(args.node_path, args.ele_path);
}

dec2d::PoissonProblem make_problem_args(const dec2d::TriangleMesh& mesh, const ProblemArgs& args) {
    dec2d::ProblemConfig config;
    if (!args.config_path.empty()) {
        require_file(args.config_path, "config file");
        config = dec2d::parse_problem_config(dec2d::read_text_file(args.config_path));
    }
    if (args.kappa) config.kappa = *args.kappa;
    if (args.source) {
        config.source_constant = *args.source;
        config.source_path.clear();
    }
    if (!args.source_csv.empty()) {
        require_file(args.source_csv, "source CSV");
        config.source_path = args.source_csv;
    }
    if (!args.dirichlet.empty())
        config.dirichlet = dec2d::detail::parse_marker_pairs(args.dirichlet, "dirichlet");
    if (!args.neumann.empty())
        config.neumann = dec2d::detail::parse_marker_pairs(args.neumann, "neumann");
    if (config.dirichlet.empty())
        throw dec2d::ConfigError("no Dirichlet condition given (--dirichlet or config file)");
    return dec2d::make_problem(mesh, config);
}

dec2d::SolverOptions solver_options(const SolverArgs& args) {
    dec2d::SolverOptions opts;
    opts.tol = args.tol;
    opts.max_iter = args.max_iter;
    opts.jacobi = args.jacobi;
    return opts;
}

std::vector<int> parse_rings_list(const std::string& text) {
    std::vector<int> rings;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = dec2d::detail::trim(item);
        if (item.empty()) continue;
        int r = 0;
        try {
            r = std::stoi(item);
        } catch (const std::exception&) {
            throw dec2d::ConfigError("bad rings entry '" + item + "'");
        }
        if (r < 1) throw dec2d::ConfigError("rings must be >= 1");
        rings.push_back(r);
    }
    if (rings.empty()) throw dec2d::ConfigError("empty rings list");
    return rings;
}

dec2d::Point2 parse_point(const std::string& text, const char* what) {
    const std::size_t comma = text.find(',');
    double x = 0.0, y = 0.0;
    if (comma == std::string::npos || !dec2d::detail::parse_double(text.substr(0, comma), x) ||
        !dec2d::detail::parse_double(text.substr(comma + 1), y))
        throw dec2d::ConfigError(std::string(what) + " must be of the form x,y");
    return {x, y};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string summary_line(const char* method, const dec2d::TriangleMesh& mesh,
                         const dec2d::SolveReport& report, double wall_ms) {
    std::string line = std::string("[") + method + "]";
    line += " nodes=" + std::to_string(mesh.num_vertices());
    line += " elements=" + std::to_string(mesh.num_triangles());
    line += " max_temp=" + g6(report.max_solution);
    line += " min_temp=" + g6(report.min_solution);
    line += " max_flux=" + g6(report.max_flux_magnitude);
    line += " iterations=" + std::to_string(report.iterations);
    line += " residual=" + g6(report.residual);
    if (report.lu_fallback_used) line += " solver=lu-fallback";
    line += " wall_ms=" + g6(wall_ms);
    return line;
}

int cmd_gen_disk(int rings, const std::string& out_base) {
    const dec2d::TriangleMesh mesh = dec2d::gen_disk_mesh(rings);
    dec2d::save_mesh_files(mesh, out_base + ".node", out_base + ".ele");
    std::cout << "wrote " << out_base << ".node / .ele: " << mesh.num_vertices() << " nodes, "
              << mesh.num_triangles() << " elements\n";
    return 0;
}

int cmd_solve(const MeshArgs& mesh_args, const ProblemArgs& problem_args,
              const SolverArgs& solver_args, const std::string& method,
              const std::string& out_prefix) {
    const dec2d::TriangleMesh mesh = load_mesh_args(mesh_args);
    const dec2d::PoissonProblem problem = make_problem_args(mesh, problem_args);
    const dec2d::SolverOptions opts = solver_options(solver_args);

    std::vector<std::string> lines;
    const auto run = [&](const char* name, bool fem) {
        const auto start = std::chrono::steady_clock::now();
        const dec2d::SolveReport report =
            fem ? dec2d::solve_fem(mesh, problem, opts) : dec2d::solve_problem(mesh, problem, opts);
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        lines.push_back(summary_line(name, mesh, report, wall_ms));
        if (!out_prefix.empty()) {
            std::ostringstream csv, vtk;
            dec2d::write_fields_csv(mesh, report, csv);
            dec2d::write_solution_vtk(mesh, report, vtk);
            write_file(out_prefix + "." + name + ".csv", csv.str());
            write_file(out_prefix + "." + name + ".vtk", vtk.str());
        }
    };

    if (method == "dec" || method == "both") run("dec", false);
    if (method == "fem" || method == "both") run("fem", true);

    std::string all;
    for (const std::string& line : lines) {
        std::cout << line << '\n';
        all += line + '\n';
    }
    if (!out_prefix.empty()) write_file(out_prefix + ".summary.txt", all);
    return 0;
}

int cmd_compare(const std::string& rings_text, double kappa, double source, double boundary,
                const SolverArgs& solver_args, const std::string& out_prefix) {
    const std::vector<int> rings = parse_rings_list(rings_text);
    const auto rows =
        dec2d::compare_disk_family(rings, kappa, source, boundary, solver_options(solver_args));
    dec2d::write_compare_text(rows, std::cout);
    if (!out_prefix.empty()) {
        std::ostringstream csv;
        dec2d::write_compare_csv(rows, csv);
        write_file(out_prefix + ".csv", csv.str());
    }
    return 0;
}

int cmd_dual(const MeshArgs& mesh_args, const std::string& out_prefix) {
    const dec2d::TriangleMesh mesh = load_mesh_args(mesh_args);
    const dec2d::DualMetrics metrics = dec2d::dual_metrics(mesh);
    std::ostringstream vtk, edges, verts;
    dec2d::write_dual_vtk(mesh, metrics, vtk);
    dec2d::write_dual_edges_csv(mesh, metrics, edges);
    dec2d::write_dual_vertices_csv(mesh, metrics, verts);
    write_file(out_prefix + ".vtk", vtk.str());
    write_file(out_prefix + "_edges.csv", edges.str());
    write_file(out_prefix + "_vertices.csv", verts.str());
    const auto flipped = dec2d::non_well_centered(mesh, metrics);
    std::cout << "dual mesh: " << metrics.circumcenters.size() << " dual vertices, "
              << mesh.num_edges() << " dual edge records, " << flipped.size()
              << " non-well-centered triangles\n";
    return 0;
}

int cmd_convergence(const std::string& rings_text, const SolverArgs& solver_args,
                    const std::string& out_path) {
    const std::vector<int> rings = parse_rings_list(rings_text);
    const auto rows = dec2d::convergence_study(rings, solver_options(solver_args));
    std::ostringstream csv;
    dec2d::write_convergence_csv(rows, csv);
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

int cmd_sample(const MeshArgs& mesh_args, const ProblemArgs& problem_args,
               const SolverArgs& solver_args, const std::string& method, const std::string& from,
               const std::string& to, std::size_t count, const std::string& out_path) {
    if (count < 2) throw dec2d::ConfigError("--samples must be at least 2");
    const dec2d::TriangleMesh mesh = load_mesh_args(mesh_args);
    const dec2d::PoissonProblem problem = make_problem_args(mesh, problem_args);
    const dec2d::SolverOptions opts = solver_options(solver_args);
    const dec2d::SolveReport report = method == "fem" ? dec2d::solve_fem(mesh, problem, opts)
                                                      : dec2d::solve_problem(mesh, problem, opts);
    const auto samples = dec2d::sample_line(mesh, report.solution, parse_point(from, "--from"),
                                            parse_point(to, "--to"), count);
    std::ostringstream csv;
    dec2d::write_samples_csv(samples, csv);
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D discrete exterior calculus Poisson toolkit"};
    app.require_subcommand(1);

    // gen-disk
    auto* gen = app.add_subcommand("gen-disk", "write the structured unit-disk mesh");
    int gen_rings = 1;
    std::string gen_out = "disk";
    gen->add_option("--rings", gen_rings, "number of rings")->required()->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_out, "output base path (.node/.ele appended)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a Poisson problem");
    MeshArgs solve_mesh;
    ProblemArgs solve_problem_args;
    SolverArgs solve_solver;
    std::string solve_method = "dec";
    std::string solve_out;
    add_mesh_options(solve, solve_mesh);
    add_problem_options(solve, solve_problem_args);
    add_solver_options(solve, solve_solver);
    solve->add_option("--method", solve_method, "dec, fem or both")
        ->check(CLI::IsMember({"dec", "fem", "both"}));
    solve->add_option("--out", solve_out, "output prefix for CSV/VTK/summary files");

    // compare
    auto* compare = app.add_subcommand("compare", "DEC vs FEM table over disk refinements");
    std::string compare_rings;
    double compare_kappa = 1.0, compare_source = -1.0, compare_boundary = 10.0;
    SolverArgs compare_solver;
    std::string compare_out;
    compare->add_option("--rings", compare_rings, "comma-separated rings list")->required();
    compare->add_option("--kappa", compare_kappa, "diffusion constant");
    compare->add_option("--source", compare_source, "uniform source term");
    compare->add_option("--boundary", compare_boundary, "Dirichlet value on the outer boundary");
    add_solver_options(compare, compare_solver);
    compare->add_option("--out", compare_out, "CSV output prefix");

    // dual
    auto* dual = app.add_subcommand("dual", "export the circumcentric dual mesh");
    MeshArgs dual_mesh;
    std::string dual_out = "dual";
    add_mesh_options(dual, dual_mesh);
    dual->add_option("--out", dual_out, "output prefix (.vtk, _edges.csv, _vertices.csv)");

    // convergence
    auto* conv = app.add_subcommand("convergence", "nodal-error study on the disk benchmark");
    std::string conv_rings;
    SolverArgs conv_solver;
    std::string conv_out;
    conv->add_option("--rings", conv_rings, "comma-separated rings list")->required();
    add_solver_options(conv, conv_solver);
    conv->add_option("--out", conv_out, "CSV output path (stdout if omitted)");

    // sample
    auto* sample = app.add_subcommand("sample", "sample a solved field along a segment");
    MeshArgs sample_mesh;
    ProblemArgs sample_problem;
    SolverArgs sample_solver;
    std::string sample_method = "dec";
    std::string sample_from, sample_to, sample_out;
    std::size_t sample_count = 100;
    add_mesh_options(sample, sample_mesh);
    add_problem_options(sample, sample_problem);
    add_solver_options(sample, sample_solver);
    sample->add_option("--method", sample_method, "dec or fem")
        ->check(CLI::IsMember({"dec", "fem"}));
    sample->add_option("--from", sample_from, "segment start x,y")->required();
    sample->add_option("--to", sample_to, "segment end x,y")->required();
    sample->add_option("--samples", sample_count, "number of samples (>= 2)");
    sample->add_option("--out", sample_out, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen_disk(gen_rings, gen_out);
        if (solve->parsed())
            return cmd_solve(solve_mesh, solve_problem_args, solve_solver, solve_method, solve_out);
        if (compare->parsed())
            return cmd_compare(compare_rings, compare_kappa, compare_source, compare_boundary,
                               compare_solver, compare_out);
        if (dual->parsed()) return cmd_dual(dual_mesh, dual_out);
        if (conv->parsed()) return cmd_convergence(conv_rings, conv_solver, conv_out);
        if (sample->parsed())
            return cmd_sample(sample_mesh, sample_problem, sample_solver, sample_method,
                              sample_from, sample_to, sample_count, sample_out);
    } catch (const dec2d::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
