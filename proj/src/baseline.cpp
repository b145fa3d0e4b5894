#include "fourex/baseline.hpp"

#include <cmath>

#include "fourex/linalg.hpp"

namespace fourex {

int fulldata_bandwidth(const FullDataConfig& cfg, int half_count) {
    if (!(cfg.oversampling > 0.0)) {
        throw std::invalid_argument("fulldata_bandwidth: oversampling must be positive");
    }
    const int n = static_cast<int>(std::lround(half_count / cfg.oversampling));
    return n < 1 ? 1 : n;
}

FourierApproximant fulldata_fe(std::span<const cdouble> samples, const FullDataConfig& cfg) {
    if (!(cfg.extension_half > 1.0)) {
        throw std::invalid_argument("fulldata_fe: extension half-length must exceed 1");
    }
    if (!(cfg.truncation > 0.0)) {
        throw std::invalid_argument("fulldata_fe: truncation threshold must be positive");
    }
    if (samples.size() % 2 == 0 || samples.size() < 3) {
        throw std::invalid_argument("fulldata_fe: sample count is not 2M+1");
    }
    const int half_count = static_cast<int>(samples.size() / 2);
    if (half_count > 1000) {
        throw std::invalid_argument("fulldata_fe: M > 1000 exceeds the dense-solve guard");
    }

    const int n = fulldata_bandwidth(cfg, half_count);
    ComplexMatrix a(2 * half_count + 1, 2 * n + 1);
    for (int l = -half_count; l <= half_count; ++l) {
        const double t = static_cast<double>(l) / half_count;
        for (int k = -n; k <= n; ++k) {
            a(l + half_count, k + n) = std::polar(1.0, k * kPi * t / cfg.extension_half);
        }
    }

    const SVDFactorization f = svd(a);
    const double threshold = cfg.truncation * f.singular_values.front();
    const std::vector<cdouble> raw = truncated_pinv_apply(f, samples, threshold);

    // Average with the conjugate-reflected twin solve, as in the boundary
    // module: the exponent columns satisfy A(Sc) = conj(Ac), so this keeps
    // the residual while making real data produce an exactly real extension.
    std::vector<cdouble> conj_b(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) conj_b[i] = std::conj(samples[i]);
    const std::vector<cdouble> twin = truncated_pinv_apply(f, conj_b, threshold);
    std::vector<cdouble> coeffs(raw.size());
    for (int k = -n; k <= n; ++k) {
        coeffs[k + n] = 0.5 * (raw[k + n] + std::conj(twin[n - k]));
    }
    return FourierApproximant(2.0 * cfg.extension_half, std::move(coeffs));
}

} // namespace fourex
