#pragma once

// Linear solvers: plain conjugate gradient for SPD systems (optionally
// Jacobi-preconditioned) and a dense partial-pivoting LU for small systems,
// used as a fallback and as an independent oracle in tests. Iteration order
// and reductions are fixed, so solves are deterministic.

#include <cmath>
#include <string>
#include <vector>

#include "dec2d/sparse.hpp"

namespace dec2d {

struct SolveError : std::runtime_error {
    std::size_t iterations;
    double residual;
    SolveError(const std::string& what, std::size_t iterations_, double residual_)
        : std::runtime_error(what + " (iterations " + std::to_string(iterations_) +
                             ", residual " + std::to_string(residual_) + ")"),
          iterations(iterations_), residual(residual_) {}
};

struct SolverOptions {
    double tol = 1e-10;        // relative to ||b||
    std::size_t max_iter = 0;  // 0 -> 10*n
    bool jacobi = false;       // diagonal preconditioning
    bool lu_fallback = true;   // dense LU retry on CG failure (n <= 2000)
};

enum class CgStatus { Converged, MaxIterations, Breakdown };

struct CgResult {
    DenseVector x;
    std::size_t iterations = 0;
    double residual = 0.0; // ||Ax-b||_2 recomputed at exit
    CgStatus status = CgStatus::Converged;
};

namespace detail {

inline double dot_dense(const DenseVector& a, const DenseVector& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

inline double norm2(const DenseVector& a) { return std::sqrt(dot_dense(a, a)); }

} // namespace detail

inline CgResult cg_solve(const SparseMatrix& a, const DenseVector& b, SolverOptions opts = {}) {
    if (a.rows != a.cols || b.size() != a.rows)
        throw std::invalid_argument("cg_solve: dimension mismatch");
    const std::size_t n = a.rows;
    const std::size_t max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * n;

    CgResult result;
    result.x.assign(n, 0.0);
    const double bnorm = detail::norm2(b);
    if (bnorm == 0.0) return result; // x = 0 solves exactly
    const double target = opts.tol * bnorm;

    DenseVector diag_inv;
    if (opts.jacobi) {
        diag_inv.assign(n, 1.0);
        for (std::size_t r = 0; r < n; ++r) {
            const double d = a.value_at(static_cast<int>(r), static_cast<int>(r));
            if (d > 0.0) diag_inv[r] = 1.0 / d;
        }
    }

    DenseVector r = b; // x0 = 0
    DenseVector z = r;
    if (opts.jacobi)
        for (std::size_t i = 0; i < n; ++i) z[i] = diag_inv[i] * r[i];
    DenseVector p = z;
    double rz = detail::dot_dense(r, z);

    for (std::size_t it = 1; it <= max_iter; ++it) {
        const DenseVector ap = matvec(a, p);
        const double pap = detail::dot_dense(p, ap);
        if (pap <= 0.0) {
            result.iterations = it - 1;
            result.residual = detail::norm2(r);
            result.status = CgStatus::Breakdown;
            return result;
        }
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < n; ++i) result.x[i] += alpha * p[i];
        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * ap[i];
        result.iterations = it;
        if (detail::norm2(r) <= target) {
            const DenseVector ax = matvec(a, result.x);
            DenseVector true_r(n);
            for (std::size_t i = 0; i < n; ++i) true_r[i] = ax[i] - b[i];
            result.residual = detail::norm2(true_r);
            result.status = CgStatus::Converged;
            return result;
        }
        if (opts.jacobi)
            for (std::size_t i = 0; i < n; ++i) z[i] = diag_inv[i] * r[i];
        else
            z = r;
        const double rz_next = detail::dot_dense(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    result.residual = detail::norm2(r);
    result.status = CgStatus::MaxIterations;
    return result;
}

// Dense LU with partial pivoting. Intended for n <= 2000.
inline DenseVector lu_solve(const SparseMatrix& a, const DenseVector& b) {
    if (a.rows != a.cols || b.size() != a.rows)
        throw std::invalid_argument("lu_solve: dimension mismatch");
    const std::size_t n = a.rows;
    std::vector<double> m(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k)
            m[r * n + static_cast<std::size_t>(a.col_indices[k])] = a.values[k];

    DenseVector x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
        if (m[pivot * n + col] == 0.0) throw SolveError("lu_solve: singular matrix", 0, 0.0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            std::swap(x[pivot], x[col]);
        }
        const double inv = 1.0 / m[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
            x[r] -= f * x[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        for (std::size_t c = r + 1; c < n; ++c) x[r] -= m[r * n + c] * x[c];
        x[r] /= m[r * n + r];
    }
    return x;
}

} // namespace dec2d
