#include "fourex/approximant.hpp"

#include <algorithm>
#include <cmath>

#include "fourex/dft.hpp"

namespace fourex {

namespace {

// exp(2*pi*i * num/den) with the ratio reduced in integer arithmetic.
cdouble unit_root(long long num, long long den) {
    long long r = num % den;
    if (r < 0) r += den;
    return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
}

} // namespace

FourierApproximant::FourierApproximant(double period, std::vector<cdouble> coefficients)
    : period_(period), coefficients_(std::move(coefficients)) {
    if (!(period_ > 0.0)) throw std::invalid_argument("FourierApproximant: period must be positive");
    if (coefficients_.empty() || coefficients_.size() % 2 == 0) {
        throw std::invalid_argument("FourierApproximant: coefficient block must have odd length");
    }
    max_mode_ = static_cast<int>(coefficients_.size() / 2);
}

FourierApproximant::FourierApproximant(long long period_num, long long period_den,
                                       std::vector<cdouble> coefficients)
    : FourierApproximant(static_cast<double>(period_num) / static_cast<double>(period_den),
                         std::move(coefficients)) {
    period_num_ = period_num;
    period_den_ = period_den;
}

cdouble FourierApproximant::coefficient(int k) const {
    if (k < -max_mode_ || k > max_mode_) {
        throw std::invalid_argument("FourierApproximant: mode index out of range");
    }
    return coefficients_[static_cast<std::size_t>(k + max_mode_)];
}

cdouble FourierApproximant::evaluate(double t) const {
    if (!std::isfinite(t)) throw std::invalid_argument("FourierApproximant: non-finite point");
    const double u = t / period_ - std::floor(t / period_); // fractional period position
    const cdouble w = std::polar(1.0, kTwoPi * u);
    cdouble z = std::polar(1.0, -kTwoPi * u * max_mode_);
    cdouble acc{0.0, 0.0};
    for (int k = -max_mode_; k <= max_mode_; ++k) {
        acc += coefficients_[static_cast<std::size_t>(k + max_mode_)] * z;
        z *= w;
        // Re-anchor the running phase now and then to stop drift accumulating.
        if (((k + max_mode_) & 0xff) == 0xff) {
            z = std::polar(1.0, kTwoPi * u * (k + 1));
        }
    }
    return acc;
}

std::vector<cdouble> FourierApproximant::evaluate(std::span<const double> points) const {
    std::vector<cdouble> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = evaluate(points[i]);
    return out;
}

FourierApproximant coefficients_from_period(const PeriodicSamples& p) {
    const long long np = static_cast<long long>(p.values.size());
    if (np < 3) throw std::invalid_argument("coefficients_from_period: need at least three samples");
    const long long m = p.half_count;

    const std::vector<cdouble> spectrum = fft(p.values, FftDirection::forward);
    const double inv_np = 1.0 / static_cast<double>(np);

    const bool even = np % 2 == 0;
    const int kmax = static_cast<int>(even ? np / 2 : (np - 1) / 2);
    std::vector<cdouble> coeffs(static_cast<std::size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k) {
        const auto bin = static_cast<std::size_t>((k % np + np) % np);
        cdouble c = spectrum[bin] * inv_np;
        if (even && std::abs(k) == kmax) c *= 0.5; // split Nyquist bin
        // Samples start at t = -1; fold exp(2*pi*i*k*M/N_p) in so the stored
        // block follows the exp(2*pi*i*k*t/P) convention.
        coeffs[static_cast<std::size_t>(k + kmax)] = c * unit_root(k * m, np);
    }
    return FourierApproximant(np, m, std::move(coeffs));
}

std::vector<cdouble> dense_period_values(const FourierApproximant& a, int dense_count) {
    const int kmax = a.max_mode();
    if (dense_count < 2 * kmax + 1) {
        throw std::invalid_argument("dense_period_values: dense grid under-resolves the modes");
    }
    std::vector<cdouble> bins(static_cast<std::size_t>(dense_count), cdouble{0.0, 0.0});
    const std::span<const cdouble> coeffs = a.coefficients();
    for (int k = -kmax; k <= kmax; ++k) {
        // Shift phase reference from t = 0 to the period start t = -1.
        cdouble c = coeffs[static_cast<std::size_t>(k + kmax)];
        if (a.has_rational_period()) {
            c *= std::conj(unit_root(k * a.period_den(), a.period_num()));
        } else {
            c *= std::polar(1.0, -kTwoPi * k / a.period());
        }
        bins[static_cast<std::size_t>((k % dense_count + dense_count) % dense_count)] += c;
    }
    std::vector<cdouble> values = fft(bins, FftDirection::inverse);
    for (cdouble& v : values) v *= static_cast<double>(dense_count);
    return values;
}

double max_error(const FourierApproximant& a,
                 const std::function<cdouble(double)>& reference, int half_count,
                 int density) {
    if (density < 2) throw std::invalid_argument("max_error: density must be at least 2");
    if (half_count < 1) throw std::invalid_argument("max_error: half count must be positive");

    const long long dm = static_cast<long long>(density) * half_count;

    // Dense FFT route when the scoring grid divides the period evenly.
    long long dense_count = 0;
    if (a.has_rational_period() && a.period_den() == half_count) {
        dense_count = density * a.period_num();
    } else {
        const double steps = a.period() * static_cast<double>(dm);
        const double rounded = std::round(steps);
        if (std::abs(steps - rounded) < 1e-9 * steps && rounded > 2 * a.max_mode()) {
            dense_count = static_cast<long long>(rounded);
        }
    }

    double worst = 0.0;
    if (dense_count > 0) {
        const std::vector<cdouble> dense = dense_period_values(a, static_cast<int>(dense_count));
        for (long long j = 0; j <= 2 * dm; ++j) {
            const double t = static_cast<double>(j - dm) / static_cast<double>(dm);
            worst = std::max(worst, std::abs(dense[static_cast<std::size_t>(j)] - reference(t)));
        }
    } else {
        for (long long j = -dm; j <= dm; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(dm);
            worst = std::max(worst, std::abs(a.evaluate(t) - reference(t)));
        }
    }
    return worst;
}

} // namespace fourex
