#pragma once

// Plain-text key/value problem configuration:
//
//   kappa     = 1.0
//   source    = -1.0            # constant, or a path to a per-vertex CSV
//   dirichlet = outer:10        # marker:value pairs, comma separated
//   neumann   = 2:100
//
// '#' starts a comment. The marker word "outer" is an alias for marker 1
// (what the disk generator assigns to its outer boundary). Dirichlet pairs
// apply to boundary vertices with the marker; Neumann pairs to boundary
// edges whose endpoints both carry it. A per-vertex source CSV holds one
// value per line (optionally "index,value"), in vertex order.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "dec2d/mesh.hpp"
#include "dec2d/mesh_io.hpp"
#include "dec2d/poisson.hpp"

namespace dec2d {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ProblemConfig {
    double kappa = 1.0;
    double source_constant = 0.0;
    std::string source_path; // per-vertex CSV; empty -> constant
    std::vector<std::pair<int, double>> dirichlet; // marker, value
    std::vector<std::pair<int, double>> neumann;   // marker, value
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto r = std::from_chars(begin, end, out);
    return r.ec == std::errc() && r.ptr == end;
}

inline int parse_marker(const std::string& word) {
    if (word == "outer") return 1;
    int marker = 0;
    const auto r = std::from_chars(word.data(), word.data() + word.size(), marker);
    if (r.ec != std::errc() || r.ptr != word.data() + word.size())
        throw ConfigError("bad boundary marker '" + word + "' (expected an integer or 'outer')");
    return marker;
}

inline std::vector<std::pair<int, double>> parse_marker_pairs(const std::string& text,
                                                              const std::string& key) {
    std::vector<std::pair<int, double>> pairs;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError(key + " entry '" + item + "' is not of the form marker:value");
        const int marker = parse_marker(trim(item.substr(0, colon)));
        double value = 0.0;
        if (!parse_double(trim(item.substr(colon + 1)), value))
            throw ConfigError(key + " entry '" + item + "' has a non-numeric value");
        pairs.emplace_back(marker, value);
    }
    if (pairs.empty()) throw ConfigError(key + " has no marker:value pairs");
    return pairs;
}

} // namespace detail

inline ProblemConfig parse_problem_config(const std::string& text) {
    ProblemConfig config;
    bool saw_source = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key == "kappa") {
            if (!detail::parse_double(value, config.kappa))
                throw ConfigError("kappa is not a number: '" + value + "'");
        } else if (key == "source") {
            saw_source = true;
            if (!detail::parse_double(value, config.source_constant)) {
                config.source_path = value; // treat as per-vertex CSV path
                config.source_constant = 0.0;
            }
        } else if (key == "dirichlet") {
            config.dirichlet = detail::parse_marker_pairs(value, "dirichlet");
        } else if (key == "neumann") {
            config.neumann = detail::parse_marker_pairs(value, "neumann");
        } else {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
    }
    if (!saw_source) config.source_constant = 0.0;
    return config;
}

inline std::vector<double> read_vertex_csv(const std::string& path, std::size_t expected) {
    const std::string text = read_text_file(path);
    std::vector<double> values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
        double v = 0.0;
        if (!detail::parse_double(detail::trim(field), v))
            throw ConfigError(path + ": non-numeric value '" + line + "'");
        values.push_back(v);
    }
    if (values.size() != expected)
        throw ConfigError(path + ": has " + std::to_string(values.size()) + " values, mesh has " +
                          std::to_string(expected) + " vertices");
    return values;
}

// Resolves marker references against a concrete mesh.
inline PoissonProblem make_problem(const TriangleMesh& mesh, const ProblemConfig& config) {
    PoissonProblem problem;
    problem.kappa = config.kappa;
    problem.source = config.source_path.empty()
                         ? std::vector<double>(mesh.num_vertices(), config.source_constant)
                         : read_vertex_csv(config.source_path, mesh.num_vertices());
    for (const auto& [marker, value] : config.dirichlet)
        if (dirichlet_on_marker(mesh, problem, marker, value) == 0)
            throw ConfigError("dirichlet marker " + std::to_string(marker) +
                              " matches no boundary vertex");
    for (const auto& [marker, value] : config.neumann)
        if (neumann_on_marker(mesh, problem, marker, value) == 0)
            throw ConfigError("neumann marker " + std::to_string(marker) +
                              " matches no boundary edge");
    return problem;
}

} // namespace dec2d
