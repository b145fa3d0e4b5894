#pragma once

#include <span>

#include "fourex/approximant.hpp"
#include "fourex/types.hpp"

namespace fourex {

/// Classical full-data discrete Fourier extension: fit all 2M+1 samples with
/// exp(i*k*pi*t/T), k = -N..N, N = round(M/gamma), through a truncated SVD.
/// Desk-scale oracle only; the dense solve is O(M^3) and M is capped at 1000.
struct FullDataConfig {
    double extension_half = 2.0; // T
    double oversampling = 2.0;   // gamma = M/N (requested)
    double truncation = 1e-14;   // tau, applied relative to sigma_1
};

/// Bandwidth for a given sample count: N = round(M/gamma), at least 1.
int fulldata_bandwidth(const FullDataConfig& cfg, int half_count);

/// Least-squares Fourier extension of the samples; the truncation threshold
/// is tau * sigma_1 because the matrix scale grows with M here, unlike the
/// fixed boundary system. Returns an approximant with period 2T.
FourierApproximant fulldata_fe(std::span<const cdouble> samples, const FullDataConfig& cfg);

} // namespace fourex
