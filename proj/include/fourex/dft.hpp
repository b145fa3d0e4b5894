#pragma once

#include <span>
#include <vector>

#include "fourex/types.hpp"

namespace fourex {

enum class FftDirection { forward, inverse };

/// Discrete Fourier transform of arbitrary length N >= 1.
///
/// Forward:  X_k = sum_j x_j exp(-2*pi*i*j*k/N)   (no scaling)
/// Inverse:  x_j = (1/N) sum_k X_k exp(+2*pi*i*j*k/N)
///
/// Lengths with only small prime factors go through mixed-radix
/// Cooley-Tukey; a large prime factor switches the whole transform to the
/// Bluestein chirp-z route, so no length is rejected except N = 0.
std::vector<cdouble> fft(std::span<const cdouble> x, FftDirection direction);

/// O(N^2) direct-summation transform with the same conventions as fft(),
/// kept as the test oracle.
std::vector<cdouble> naive_dft(std::span<const cdouble> x, FftDirection direction);

} // namespace fourex
