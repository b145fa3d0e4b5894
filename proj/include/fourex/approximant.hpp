#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fourex/extension.hpp"
#include "fourex/types.hpp"

namespace fourex {

/// Trigonometric approximant f(t) ~ sum_{k=-K..K} c_k exp(2*pi*i*k*t/P).
///
/// When built from periodic samples the period is the exact rational N_p/M
/// and all node/phase arithmetic stays in integers; approximants with an
/// arbitrary real period (the full-data baseline) carry only the double.
class FourierApproximant {
  public:
    /// Direct construction from an odd-length coefficient block c_{-K}..c_{K}.
    FourierApproximant(double period, std::vector<cdouble> coefficients);

    /// Rational-period construction (period = period_num / period_den).
    FourierApproximant(long long period_num, long long period_den,
                       std::vector<cdouble> coefficients);

    double period() const { return period_; }
    int max_mode() const { return max_mode_; } // K
    std::span<const cdouble> coefficients() const { return coefficients_; }
    cdouble coefficient(int k) const; // k in [-K, K]

    bool has_rational_period() const { return period_den_ > 0; }
    long long period_num() const { return period_num_; }
    long long period_den() const { return period_den_; }

    cdouble evaluate(double t) const;
    std::vector<cdouble> evaluate(std::span<const double> points) const;

  private:
    double period_;
    long long period_num_ = 0;
    long long period_den_ = 0;
    std::vector<cdouble> coefficients_; // k = -K..K
    int max_mode_;
};

/// Fourier coefficients of one assembled period via a forward FFT. Needs at
/// least three samples. For an even sample count the Nyquist bin is split
/// evenly between k = +-N_p/2 so real data keeps a real approximant.
FourierApproximant coefficients_from_period(const PeriodicSamples& p);

/// Maximum pointwise error |a(t) - reference(t)| over the grid t = l/(density*M),
/// l = -density*M .. density*M (the original interval only, not the extension
/// segment). Uses a zero-padded inverse FFT when the dense grid is commensurate
/// with the period and falls back to direct summation otherwise.
double max_error(const FourierApproximant& a,
                 const std::function<cdouble(double)>& reference, int half_count,
                 int density = 10);

/// Dense values a(-1 + j*P/N_d), j = 0..N_d-1, over one full period via
/// zero-padded inverse FFT. Exposed for the FFT/direct agreement tests.
std::vector<cdouble> dense_period_values(const FourierApproximant& a, int dense_count);

} // namespace fourex
