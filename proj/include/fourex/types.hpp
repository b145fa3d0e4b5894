#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fourex {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Thrown when a computation produces no usable result (divergence,
/// non-finite values, exhausted search bounds). Precondition violations
/// use std::invalid_argument instead.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fourex
