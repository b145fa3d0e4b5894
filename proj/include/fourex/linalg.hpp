#pragma once

#include <span>
#include <vector>

#include "fourex/types.hpp"

namespace fourex {

/// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cdouble> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    cdouble& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const cdouble& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Thin SVD A = U * diag(sigma) * V^H with r = min(rows, cols) retained
/// modes. Columns of U and V are orthonormal under the conjugate-transpose
/// inner product; singular values are sorted non-increasing. Modes at the
/// roundoff floor (sigma <= eps * sigma_1) are mutually orthogonal only to
/// within their own noise; every mode above the floor meets the 1e-13
/// orthonormality and reconstruction contract.
struct SVDFactorization {
    ComplexMatrix u;                      // rows x r
    std::vector<double> singular_values;  // length r
    ComplexMatrix v;                      // cols x r

    int rank_limit() const { return static_cast<int>(singular_values.size()); }
};

/// One-sided Jacobi SVD. Sizes here stay small (a few hundred rows), so the
/// O(n^3) dense sweep is the right tool; Jacobi keeps full relative accuracy
/// on the tiny singular values the truncation threshold has to see.
SVDFactorization svd(const ComplexMatrix& a);

/// Truncated pseudo-inverse solve: sum over sigma_i > tau of
/// (u_i^H b / sigma_i) v_i. Strict inequality (tau = 0 keeps every nonzero
/// mode); if nothing survives the threshold the result is the zero vector.
std::vector<cdouble> truncated_pinv_apply(const SVDFactorization& f,
                                          std::span<const cdouble> b, double tau);

} // namespace fourex
