#pragma once

// Minimal real sparse linear algebra: CSR storage built from triplets,
// matrix-vector products, transpose, and the A^T D B product used for
// stiffness assembly. Row entries are kept sorted by column and summation
// orders are fixed, so results are deterministic.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dec2d/incidence.hpp"
#include "dec2d/hodge.hpp"
#include "dec2d/parallel.hpp"

namespace dec2d {

using DenseVector = std::vector<double>;

struct Triplet {
    int row;
    int col;
    double value;
};

struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> row_offsets; // size rows+1
    std::vector<int> col_indices;         // sorted, unique within each row
    std::vector<double> values;

    std::size_t nnz() const { return values.size(); }

    double value_at(int r, int c) const {
        for (std::size_t k = row_offsets[static_cast<std::size_t>(r)];
             k < row_offsets[static_cast<std::size_t>(r) + 1]; ++k)
            if (col_indices[k] == c) return values[k];
        return 0.0;
    }
};

// Duplicate (row,col) triplets are summed. Entries that sum to exactly zero
// are dropped unless keep_zeros is set.
inline SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                                  bool keep_zeros = false) {
    for (const Triplet& t : triplets)
        if (t.row < 0 || static_cast<std::size_t>(t.row) >= rows || t.col < 0 ||
            static_cast<std::size_t>(t.col) >= cols)
            throw std::invalid_argument("triplet index out of range");
    // stable: duplicates are summed in insertion order, so structurally
    // symmetric assemblies stay bitwise symmetric
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.row_offsets.assign(rows + 1, 0);
    std::size_t i = 0;
    while (i < triplets.size()) {
        const int r = triplets[i].row, c = triplets[i].col;
        double sum = 0.0;
        while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
            sum += triplets[i++].value;
        if (sum != 0.0 || keep_zeros) {
            m.col_indices.push_back(c);
            m.values.push_back(sum);
            ++m.row_offsets[static_cast<std::size_t>(r) + 1];
        }
    }
    for (std::size_t r = 0; r < rows; ++r) m.row_offsets[r + 1] += m.row_offsets[r];
    return m;
}

inline SparseMatrix from_incidence(const IncidenceMatrix& a) {
    std::vector<Triplet> triplets;
    triplets.reserve(a.entries.size());
    for (const auto& e : a.entries)
        triplets.push_back({e.row, e.col, static_cast<double>(e.value)});
    return from_triplets(a.rows, a.cols, std::move(triplets), true);
}

inline DenseVector matvec(const SparseMatrix& a, const DenseVector& x) {
    if (x.size() != a.cols) throw std::invalid_argument("matvec: dimension mismatch");
    DenseVector y(a.rows, 0.0);
    parallel_for(a.rows, [&](std::size_t r) {
        double sum = 0.0;
        for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k)
            sum += a.values[k] * x[static_cast<std::size_t>(a.col_indices[k])];
        y[r] = sum;
    });
    return y;
}

inline SparseMatrix transpose(const SparseMatrix& a) {
    std::vector<Triplet> triplets;
    triplets.reserve(a.nnz());
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k)
            triplets.push_back({a.col_indices[k], static_cast<int>(r), a.values[k]});
    return from_triplets(a.cols, a.rows, std::move(triplets), true);
}

// A^T D B for diagonal D, the shape of a Galerkin-style stiffness product.
// When A and B are the same matrix the result is exactly symmetric: the
// (i,j) and (j,i) sums run over the same k in the same order.
inline SparseMatrix triple_product(const SparseMatrix& a, const DiagonalOperator& d,
                                   const SparseMatrix& b) {
    if (a.rows != d.size || b.rows != d.size)
        throw std::invalid_argument("triple_product: dimension mismatch");
    std::vector<Triplet> triplets;
    triplets.reserve(a.nnz() * 3);
    for (std::size_t k = 0; k < d.size; ++k) {
        const double dk = d.diagonal[k];
        for (std::size_t ia = a.row_offsets[k]; ia < a.row_offsets[k + 1]; ++ia)
            for (std::size_t ib = b.row_offsets[k]; ib < b.row_offsets[k + 1]; ++ib)
                triplets.push_back(
                    {a.col_indices[ia], b.col_indices[ib], a.values[ia] * dk * b.values[ib]});
    }
    return from_triplets(a.cols, b.cols, std::move(triplets));
}

inline SparseMatrix scaled(SparseMatrix a, double s) {
    for (double& v : a.values) v *= s;
    return a;
}

// MatrixMarket real coordinate I/O (1-based), for debugging dumps.
inline void write_matrix_market(const SparseMatrix& a, std::ostream& out) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.rows << ' ' << a.cols << ' ' << a.nnz() << '\n';
    char buf[32];
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", a.values[k]);
            out << r + 1 << ' ' << a.col_indices[k] + 1 << ' ' << buf << '\n';
        }
}

inline SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::runtime_error("not a MatrixMarket stream");
    if (line.find("coordinate") == std::string::npos || line.find("real") == std::string::npos)
        throw std::runtime_error("unsupported MatrixMarket format: " + line);
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '%') break;
    std::size_t rows = 0, cols = 0, nnz = 0;
    {
        std::istringstream header(line);
        if (!(header >> rows >> cols >> nnz)) throw std::runtime_error("bad MatrixMarket header");
    }
    std::vector<Triplet> triplets;
    triplets.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        long long r = 0, c = 0;
        double v = 0.0;
        if (!(in >> r >> c >> v)) throw std::runtime_error("truncated MatrixMarket data");
        triplets.push_back({static_cast<int>(r - 1), static_cast<int>(c - 1), v});
    }
    return from_triplets(rows, cols, std::move(triplets), true);
}

} // namespace dec2d
