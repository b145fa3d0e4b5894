#pragma once

#include <span>
#include <vector>

#include "fourex/grids.hpp"
#include "fourex/linalg.hpp"
#include "fourex/types.hpp"

namespace fourex {

/// Tunable parameters of the boundary-interval extension. `basis_order` is
/// derived from the requested oversampling ratio (n_delta = round((m-1)/g))
/// and `oversampling` stores the realized ratio (m-1)/n_delta.
struct ExtensionConfig {
    double extension_ratio = 6.0; // T_delta
    int boundary_nodes = 25;      // m_delta
    double oversampling = 1.0;    // gamma_delta, realized
    int basis_order = 24;         // n_delta
    double truncation = 1e-14;    // tau
};

ExtensionConfig make_config(double extension_ratio, int boundary_nodes,
                            double oversampling, double truncation = 1e-14);

/// Recommended parameters: T_delta = 6, m_delta = 25, gamma_delta = 1.
ExtensionConfig default_config();
/// Alternate preset: T_delta = 2.3, m_delta = 65, gamma_delta = 2.
ExtensionConfig alternate_config();

/// Precomputed, immutable solve operator: the truncated-SVD factorization of
/// the boundary collocation matrix. Safe to share across threads.
struct ExtensionOperator {
    ExtensionConfig config;
    ExtensionGeometry geometry;
    SVDFactorization factorization;
};

/// Collocation matrix A (2*m_delta rows, 2*n_delta+1 columns):
/// A(l,k) = phi_k(x_l) for the first m_delta rows and phi_k(x_{L/2+l-m})
/// for the rest, with phi_k(x) = exp(i*k*x)/sqrt(L_delta), k ascending.
ComplexMatrix build_system_matrix(const ExtensionGeometry& geom, int basis_order);

ExtensionOperator precompute_operator(const ExtensionConfig& config);

/// Stack the boundary samples in the row order of the collocation matrix:
/// right-end values f(t_{M-m+1})..f(t_M) first, then left-end values
/// f(t_{-M})..f(t_{-M+m-1}).
std::vector<cdouble> extract_boundary_data(std::span<const cdouble> samples,
                                           const ExtensionGeometry& geom, int half_count);

/// Truncated-SVD coefficients c_{-n}..c_{n} for the boundary data. The raw
/// solve is averaged with its conjugate-reflected twin: the collocation
/// columns obey A(Sc) = conj(Ac) for (Sc)_k = conj(c_{-k}), so the average
/// has the same residual while restoring the exact symmetry that noisy
/// singular vectors near the truncation threshold lose. Real boundary data
/// therefore yields an exactly real extension.
std::vector<cdouble> extension_coefficients(const ExtensionOperator& op,
                                            std::span<const cdouble> boundary);

/// Evaluate the extension on all L_delta working nodes through a zero-padded
/// inverse FFT of the solved coefficients.
std::vector<cdouble> compute_extension_values(const ExtensionOperator& op,
                                              std::span<const cdouble> boundary);

/// One full period of the assembled extension f_c on the uniform grid:
/// values[j] = f_c(-1 + j/M) for j = 0 .. 2M + L_delta/2 - m_delta.
struct PeriodicSamples {
    int half_count = 0; // M
    double lambda = 0.0;
    std::vector<cdouble> values;
};

PeriodicSamples assemble_periodic_samples(std::span<const cdouble> samples,
                                          std::span<const cdouble> extension,
                                          const ExtensionGeometry& geom, int half_count);

/// extract -> solve -> assemble in one call.
PeriodicSamples extend_periodically(const ExtensionOperator& op,
                                    std::span<const cdouble> samples, int half_count);

} // namespace fourex
