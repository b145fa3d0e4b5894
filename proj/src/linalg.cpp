#include "fourex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fourex {

namespace {

// Column-major workspace for the Jacobi sweeps; column operations dominate
// and need to be contiguous.
struct ColMat {
    int rows = 0;
    int cols = 0;
    std::vector<cdouble> data;

    ColMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    cdouble* col(int j) { return data.data() + static_cast<std::size_t>(j) * rows; }
    const cdouble* col(int j) const { return data.data() + static_cast<std::size_t>(j) * rows; }
};

struct JacobiResult {
    ColMat u;                 // rows x cols, orthonormal columns
    std::vector<double> sigma; // length cols
    ColMat v;                 // cols x cols, unitary
};

// One-sided Jacobi on a matrix with rows >= cols: orthogonalize column pairs
// by right rotations until convergence. Returns B = U * diag(sigma) * V^H.
//
// Two departures from the textbook loop keep graded spectra fast: columns are
// kept in norm-descending order between sweeps (de Rijk), and a pair is only
// rotated when its inner product also clears the absolute floor
// (eps * sigma_max)^2. Skipped rotations sit at the square of the roundoff
// level, so the reconstruction is unaffected; the price is that modes with
// sigma <= eps * sigma_1 are not re-orthogonalized among themselves.
JacobiResult one_sided_jacobi(ColMat b) {
    const int rows = b.rows;
    const int cols = b.cols;
    ColMat v(cols, cols);
    for (int j = 0; j < cols; ++j) v.col(j)[j] = 1.0;

    const double eps = std::numeric_limits<double>::epsilon();
    // Couplings below sqrt(rows)*eps*|b_p||b_q| are at the roundoff level of
    // the dot product itself and cannot be driven lower.
    const double tol = std::sqrt(static_cast<double>(rows)) * eps;
    const int max_sweeps = 64;

    std::vector<double> norm_sq(cols);
    std::vector<int> order(cols);
    ColMat b_tmp(rows, cols);
    ColMat v_tmp(cols, cols);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        // Refresh the cached norms and restore norm-descending column order.
        double max_norm_sq = 0.0;
        for (int j = 0; j < cols; ++j) {
            double acc = 0.0;
            const cdouble* col = b.col(j);
            for (int i = 0; i < rows; ++i) acc += std::norm(col[i]);
            norm_sq[j] = acc;
            max_norm_sq = std::max(max_norm_sq, acc);
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int c) { return norm_sq[a] > norm_sq[c]; });
        if (!std::is_sorted(order.begin(), order.end())) {
            std::vector<double> norm_tmp(cols);
            for (int j = 0; j < cols; ++j) {
                const int src = order[j];
                std::copy(b.col(src), b.col(src) + rows, b_tmp.col(j));
                std::copy(v.col(src), v.col(src) + cols, v_tmp.col(j));
                norm_tmp[j] = norm_sq[src];
            }
            std::swap(b.data, b_tmp.data);
            std::swap(v.data, v_tmp.data);
            norm_sq.swap(norm_tmp);
        }
        const double floor = eps * eps * max_norm_sq;

        bool rotated = false;
        for (int p = 0; p < cols - 1; ++p) {
            for (int q = p + 1; q < cols; ++q) {
                cdouble* bp = b.col(p);
                cdouble* bq = b.col(q);
                const double alpha = norm_sq[p];
                const double beta = norm_sq[q];
                if (std::max(alpha, beta) <= floor) continue;
                cdouble gamma{0.0, 0.0};
                for (int i = 0; i < rows; ++i) gamma += std::conj(bp[i]) * bq[i];
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= tol * std::sqrt(alpha * beta) || g <= floor) continue;
                rotated = true;

                // Phase that makes the pair inner product real, then the
                // classic real Jacobi rotation.
                const cdouble phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                const cdouble sp = s * phase;        // applied to column q side
                const cdouble spc = s * std::conj(phase);
                for (int i = 0; i < rows; ++i) {
                    const cdouble xp = bp[i];
                    const cdouble xq = bq[i];
                    bp[i] = c * xp - spc * xq;
                    bq[i] = sp * xp + c * xq;
                }
                cdouble* vp = v.col(p);
                cdouble* vq = v.col(q);
                for (int i = 0; i < cols; ++i) {
                    const cdouble xp = vp[i];
                    const cdouble xq = vq[i];
                    vp[i] = c * xp - spc * xq;
                    vq[i] = sp * xp + c * xq;
                }
                const double cs2g = 2.0 * c * s * g;
                norm_sq[p] = c * c * alpha + s * s * beta - cs2g;
                norm_sq[q] = s * s * alpha + c * c * beta + cs2g;
            }
        }
        if (!rotated) break;
        if (sweep == max_sweeps - 1) {
            throw numerical_error("svd: Jacobi sweeps did not converge");
        }
    }

    std::vector<double> sigma(cols);
    for (int j = 0; j < cols; ++j) {
        double acc = 0.0;
        const cdouble* col = b.col(j);
        for (int i = 0; i < rows; ++i) acc += std::norm(col[i]);
        sigma[j] = std::sqrt(acc);
    }

    // Final descending order and normalization of U's columns.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int bcol) { return sigma[a] > sigma[bcol]; });

    ColMat u_sorted(rows, cols);
    ColMat v_sorted(cols, cols);
    std::vector<double> sigma_sorted(cols);
    for (int j = 0; j < cols; ++j) {
        const int src = order[j];
        sigma_sorted[j] = sigma[src];
        const double inv = sigma[src] > 0.0 ? 1.0 / sigma[src] : 0.0;
        const cdouble* bc = b.col(src);
        cdouble* uc = u_sorted.col(j);
        for (int i = 0; i < rows; ++i) uc[i] = bc[i] * inv;
        if (sigma[src] == 0.0) uc[j % rows] = 1.0; // placeholder direction for a null mode
        std::copy(v.col(src), v.col(src) + cols, v_sorted.col(j));
    }
    return JacobiResult{std::move(u_sorted), std::move(sigma_sorted), std::move(v_sorted)};
}

ColMat to_col_major(const ComplexMatrix& a, bool conjugate_transpose) {
    if (!conjugate_transpose) {
        ColMat out(a.rows, a.cols);
        for (int j = 0; j < a.cols; ++j) {
            cdouble* col = out.col(j);
            for (int i = 0; i < a.rows; ++i) col[i] = a(i, j);
        }
        return out;
    }
    ColMat out(a.cols, a.rows);
    for (int j = 0; j < a.rows; ++j) {
        cdouble* col = out.col(j);
        for (int i = 0; i < a.cols; ++i) col[i] = std::conj(a(j, i));
    }
    return out;
}

ComplexMatrix from_col_major(const ColMat& m, int keep_cols) {
    ComplexMatrix out(m.rows, keep_cols);
    for (int j = 0; j < keep_cols; ++j) {
        const cdouble* col = m.col(j);
        for (int i = 0; i < m.rows; ++i) out(i, j) = col[i];
    }
    return out;
}

} // namespace

SVDFactorization svd(const ComplexMatrix& a) {
    if (a.rows < 1 || a.cols < 1) throw std::invalid_argument("svd: empty matrix");
    for (const cdouble& v : a.data) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("svd: matrix has non-finite entries");
        }
    }

    // Rotate over the smaller dimension: factor A^H instead when cols > rows
    // and swap the roles of U and V afterwards.
    const bool transposed = a.cols > a.rows;
    JacobiResult r = one_sided_jacobi(to_col_major(a, transposed));

    SVDFactorization f;
    f.singular_values = std::move(r.sigma);
    const int rank = static_cast<int>(f.singular_values.size());
    if (!transposed) {
        f.u = from_col_major(r.u, rank);
        f.v = from_col_major(r.v, rank);
    } else {
        f.u = from_col_major(r.v, rank);
        f.v = from_col_major(r.u, rank);
    }
    return f;
}

std::vector<cdouble> truncated_pinv_apply(const SVDFactorization& f,
                                          std::span<const cdouble> b, double tau) {
    const int rows = f.u.rows;
    const int cols = f.v.rows;
    const int rank = f.rank_limit();
    if (static_cast<int>(b.size()) != rows) {
        throw std::invalid_argument("truncated_pinv_apply: right-hand side length mismatch");
    }
    if (!(tau >= 0.0)) throw std::invalid_argument("truncated_pinv_apply: tau must be non-negative");

    std::vector<cdouble> c(cols, cdouble{0.0, 0.0});
    for (int i = 0; i < rank; ++i) {
        if (!(f.singular_values[i] > tau)) break; // sorted: nothing further survives
        cdouble proj{0.0, 0.0};
        for (int r = 0; r < rows; ++r) proj += std::conj(f.u(r, i)) * b[r];
        proj /= f.singular_values[i];
        for (int r = 0; r < cols; ++r) c[r] += proj * f.v(r, i);
    }
    return c;
}

} // namespace fourex
