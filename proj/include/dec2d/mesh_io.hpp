#pragma once

// Triangle-style .node/.ele text I/O.
//
// .node header "<#nodes> 2 0 <#bmarkers>" with rows "idx x y [marker]";
// .ele header "<#tris> 3 0" with rows "idx a b c". Indices may be 0- or
// 1-based; the base is detected from the first data row. '#' starts a
// comment. Writing always emits 0-based indices and coordinates with 17
// significant digits, so a save/load round trip is exact.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dec2d/mesh.hpp"

namespace dec2d {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

namespace detail {

// Whitespace tokenizer that remembers where each token started.
struct Token {
    std::string_view text;
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (c == '#') { // comment to end of line
            while (i < n && text[i] != '\n') ++i;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            ++col;
            ++i;
        } else {
            const std::size_t start = i, start_col = col;
            while (i < n && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
                   text[i] != '\n' && text[i] != ',' && text[i] != '#') {
                ++i;
                ++col;
            }
            tokens.push_back({text.substr(start, i - start), line, start_col});
        }
    }
    return tokens;
}

struct TokenReader {
    std::vector<Token> tokens;
    std::size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }

    const Token& peek(const char* what) const {
        if (done()) {
            const Token& last = tokens.empty() ? Token{"", 1, 1} : tokens.back();
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             last.line, last.column + last.text.size());
        }
        return tokens[pos];
    }

    const Token& take(const char* what) {
        if (done()) {
            const Token& last = tokens.empty() ? Token{"", 1, 1} : tokens.back();
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             last.line, last.column + last.text.size());
        }
        return tokens[pos++];
    }

    long long take_int(const char* what) {
        const Token& t = take(what);
        long long value = 0;
        const auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (r.ec != std::errc() || r.ptr != t.text.data() + t.text.size())
            throw ParseError(std::string("expected integer for ") + what + ", got '" +
                             std::string(t.text) + "'", t.line, t.column);
        return value;
    }

    double take_real(const char* what) {
        const Token& t = take(what);
        double value = 0.0;
        const auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (r.ec != std::errc() || r.ptr != t.text.data() + t.text.size())
            throw ParseError(std::string("expected number for ") + what + ", got '" +
                             std::string(t.text) + "'", t.line, t.column);
        return value;
    }
};

inline long long detect_base(long long first_index, const Token& tok) {
    if (first_index == 0 || first_index == 1) return first_index;
    throw ParseError("cannot detect index base: first index is " + std::to_string(first_index),
                     tok.line, tok.column);
}

inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

// Parses .node/.ele texts and returns a fully validated mesh.
inline TriangleMesh load_mesh(const std::string& node_text, const std::string& ele_text) {
    using detail::TokenReader;

    TokenReader nodes{detail::tokenize(node_text)};
    const long long nv = nodes.take_int("node count");
    const long long dim = nodes.take_int("dimension");
    const long long nattr = nodes.take_int("attribute count");
    const long long nmark = nodes.take_int("boundary marker count");
    if (nv <= 0) throw ParseError("node count must be positive", 1, 1);
    if (dim != 2) throw ParseError("expected dimension 2", 1, 1);
    if (nattr != 0) throw ParseError("node attributes are not supported", 1, 1);
    if (nmark != 0 && nmark != 1) throw ParseError("boundary marker count must be 0 or 1", 1, 1);

    std::vector<Point2> vertices;
    std::vector<int> markers;
    vertices.reserve(static_cast<std::size_t>(nv));
    long long base = 0;
    for (long long row = 0; row < nv; ++row) {
        const detail::Token& idx_tok = nodes.peek("node index");
        const long long idx = nodes.take_int("node index");
        if (row == 0) base = detail::detect_base(idx, idx_tok);
        if (idx != base + row)
            throw ParseError("non-sequential node index " + std::to_string(idx),
                             idx_tok.line, idx_tok.column);
        const double x = nodes.take_real("x coordinate");
        const double y = nodes.take_real("y coordinate");
        vertices.push_back({x, y});
        markers.push_back(nmark == 1 ? static_cast<int>(nodes.take_int("boundary marker")) : 0);
    }
    if (!nodes.done()) {
        const detail::Token& t = nodes.peek("");
        throw ParseError("trailing content after node rows", t.line, t.column);
    }

    TokenReader eles{detail::tokenize(ele_text)};
    const long long nt = eles.take_int("triangle count");
    const long long npt = eles.take_int("nodes per triangle");
    const long long eattr = eles.take_int("attribute count");
    if (nt <= 0) throw ParseError("triangle count must be positive", 1, 1);
    if (npt != 3) throw ParseError("expected 3 nodes per triangle", 1, 1);
    if (eattr != 0) throw ParseError("element attributes are not supported", 1, 1);

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<std::size_t>(nt));
    long long ele_base = 0;
    for (long long row = 0; row < nt; ++row) {
        const detail::Token& idx_tok = eles.peek("triangle index");
        const long long idx = eles.take_int("triangle index");
        if (row == 0) ele_base = detail::detect_base(idx, idx_tok);
        if (idx != ele_base + row)
            throw ParseError("non-sequential triangle index " + std::to_string(idx),
                             idx_tok.line, idx_tok.column);
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            const detail::Token& v_tok = eles.peek("vertex index");
            const long long v = eles.take_int("vertex index") - base;
            if (v < 0 || v >= nv)
                throw ParseError("vertex index " + std::to_string(v + base) + " out of range",
                                 v_tok.line, v_tok.column);
            tri[static_cast<std::size_t>(k)] = static_cast<int>(v);
        }
        triangles.push_back(tri);
    }
    if (!eles.done()) {
        const detail::Token& t = eles.peek("");
        throw ParseError("trailing content after triangle rows", t.line, t.column);
    }

    return build_mesh(std::move(vertices), std::move(triangles), std::move(markers));
}

inline std::string save_node(const TriangleMesh& mesh) {
    std::ostringstream out;
    out << mesh.num_vertices() << " 2 0 1\n";
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v)
        out << v << ' ' << detail::format_g17(mesh.vertices[v].x) << ' '
            << detail::format_g17(mesh.vertices[v].y) << ' ' << mesh.vertex_markers[v] << '\n';
    return out.str();
}

inline std::string save_ele(const TriangleMesh& mesh) {
    std::ostringstream out;
    out << mesh.num_triangles() << " 3 0\n";
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
        out << t << ' ' << mesh.triangles[t][0] << ' ' << mesh.triangles[t][1] << ' '
            << mesh.triangles[t][2] << '\n';
    return out.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

inline TriangleMesh load_mesh_files(const std::string& node_path, const std::string& ele_path) {
    return load_mesh(read_text_file(node_path), read_text_file(ele_path));
}

inline void save_mesh_files(const TriangleMesh& mesh, const std::string& node_path,
                            const std::string& ele_path) {
    write_text_file(node_path, save_node(mesh));
    write_text_file(ele_path, save_ele(mesh));
}

} // namespace dec2d
