#include "fourex/extension.hpp"

#include <cmath>

#include "fourex/dft.hpp"

namespace fourex {

ExtensionConfig make_config(double extension_ratio, int boundary_nodes,
                            double oversampling, double truncation) {
    if (!(extension_ratio > 1.0)) {
        throw std::invalid_argument("make_config: extension ratio must exceed 1");
    }
    if (boundary_nodes < 2) {
        throw std::invalid_argument("make_config: need at least two boundary nodes");
    }
    if (!(oversampling > 0.0)) {
        throw std::invalid_argument("make_config: oversampling ratio must be positive");
    }
    if (!(truncation > 0.0)) {
        throw std::invalid_argument("make_config: truncation threshold must be positive");
    }
    const int basis_order =
        static_cast<int>(std::lround((boundary_nodes - 1) / oversampling));
    if (basis_order < 1) {
        throw std::invalid_argument("make_config: oversampling leaves no basis modes");
    }
    ExtensionConfig cfg;
    cfg.extension_ratio = extension_ratio;
    cfg.boundary_nodes = boundary_nodes;
    cfg.basis_order = basis_order;
    cfg.oversampling = static_cast<double>(boundary_nodes - 1) / basis_order;
    cfg.truncation = truncation;
    return cfg;
}

ExtensionConfig default_config() { return make_config(6.0, 25, 1.0); }

ExtensionConfig alternate_config() { return make_config(2.3, 65, 2.0); }

ComplexMatrix build_system_matrix(const ExtensionGeometry& geom, int basis_order) {
    if (basis_order < 1) throw std::invalid_argument("build_system_matrix: basis order must be positive");
    const int modes = 2 * basis_order + 1;
    if (modes > geom.node_count) {
        throw std::invalid_argument("build_system_matrix: basis not resolvable on the working grid");
    }
    const int m = geom.boundary_nodes;
    const double scale = 1.0 / std::sqrt(static_cast<double>(geom.node_count));
    ComplexMatrix a(2 * m, modes);
    for (int l = 1; l <= 2 * m; ++l) {
        const int node_index = l <= m ? l : geom.half() + l - m;
        const double x = geom.node(node_index);
        for (int k = -basis_order; k <= basis_order; ++k) {
            a(l - 1, k + basis_order) = scale * std::polar(1.0, k * x);
        }
    }
    return a;
}

ExtensionOperator precompute_operator(const ExtensionConfig& config) {
    const ExtensionGeometry geom =
        extension_geometry(config.extension_ratio, config.boundary_nodes);
    return ExtensionOperator{config, geom, svd(build_system_matrix(geom, config.basis_order))};
}

std::vector<cdouble> extract_boundary_data(std::span<const cdouble> samples,
                                           const ExtensionGeometry& geom, int half_count) {
    const int m = geom.boundary_nodes;
    if (half_count < m) {
        throw std::invalid_argument("extract_boundary_data: boundary window exceeds half grid");
    }
    if (static_cast<int>(samples.size()) != 2 * half_count + 1) {
        throw std::invalid_argument("extract_boundary_data: sample count is not 2M+1");
    }
    std::vector<cdouble> g(2 * static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        g[j - 1] = samples[2 * half_count - m + j]; // f(t_{M-m+j})
        g[m + j - 1] = samples[j - 1];              // f(t_{-M+j-1})
    }
    return g;
}

std::vector<cdouble> extension_coefficients(const ExtensionOperator& op,
                                            std::span<const cdouble> boundary) {
    const int m = op.geometry.boundary_nodes;
    if (static_cast<int>(boundary.size()) != 2 * m) {
        throw std::invalid_argument("extension_coefficients: boundary vector length mismatch");
    }
    const std::vector<cdouble> raw =
        truncated_pinv_apply(op.factorization, boundary, op.config.truncation);

    std::vector<cdouble> conj_b(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i) conj_b[i] = std::conj(boundary[i]);
    const std::vector<cdouble> twin =
        truncated_pinv_apply(op.factorization, conj_b, op.config.truncation);

    const int n = op.config.basis_order;
    std::vector<cdouble> coeffs(raw.size());
    for (int k = -n; k <= n; ++k) {
        coeffs[k + n] = 0.5 * (raw[k + n] + std::conj(twin[n - k]));
    }
    return coeffs;
}

std::vector<cdouble> compute_extension_values(const ExtensionOperator& op,
                                              std::span<const cdouble> boundary) {
    const std::vector<cdouble> coeffs = extension_coefficients(op, boundary);

    // g_c(x_j) = (1/sqrt(L)) sum_k c_k exp(i k x_j): wrap k into FFT bins and
    // run one inverse transform of length L_delta.
    const int L = op.geometry.node_count;
    const int n = op.config.basis_order;
    std::vector<cdouble> bins(static_cast<std::size_t>(L), cdouble{0.0, 0.0});
    for (int k = -n; k <= n; ++k) {
        bins[static_cast<std::size_t>((k % L + L) % L)] = coeffs[k + n];
    }
    std::vector<cdouble> values = fft(bins, FftDirection::inverse);
    const double scale = std::sqrt(static_cast<double>(L));
    for (cdouble& v : values) v *= scale;
    return values;
}

PeriodicSamples assemble_periodic_samples(std::span<const cdouble> samples,
                                          std::span<const cdouble> extension,
                                          const ExtensionGeometry& geom, int half_count) {
    if (static_cast<int>(samples.size()) != 2 * half_count + 1) {
        throw std::invalid_argument("assemble_periodic_samples: sample count is not 2M+1");
    }
    if (static_cast<int>(extension.size()) != geom.node_count) {
        throw std::invalid_argument("assemble_periodic_samples: extension length mismatch");
    }
    const int m = geom.boundary_nodes;
    PeriodicSamples out;
    out.half_count = half_count;
    out.lambda = period_lambda(geom, half_count);
    out.values.reserve(per_period_count(geom, half_count));
    out.values.assign(samples.begin(), samples.end());
    // f_c(t_l) = g_c(x_{m + l - M}) for M < l <= M + L/2 - m (1-based x index).
    for (int l = half_count + 1; l <= half_count + geom.half() - m; ++l) {
        out.values.push_back(extension[m + l - half_count - 1]);
    }
    return out;
}

PeriodicSamples extend_periodically(const ExtensionOperator& op,
                                    std::span<const cdouble> samples, int half_count) {
    const std::vector<cdouble> g = extract_boundary_data(samples, op.geometry, half_count);
    const std::vector<cdouble> gc = compute_extension_values(op, g);
    return assemble_periodic_samples(samples, gc, op.geometry, half_count);
}

} // namespace fourex
