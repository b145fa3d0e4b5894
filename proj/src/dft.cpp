#include "fourex/dft.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fourex {

namespace {

// Largest prime factor handled by the direct mixed-radix path (the classic
// small radices); anything bigger routes the whole transform through
// Bluestein. Keeping the bound low also keeps large-N timing homogeneous:
// the assembled period lengths 2M + const virtually never stay 13-smooth, so
// every large transform pays the same chirp-z constant.
constexpr std::size_t kMaxDirectPrime = 13;

std::size_t smallest_prime_factor(std::size_t n) {
    if (n % 2 == 0) return 2;
    for (std::size_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return p;
    }
    return n;
}

std::size_t largest_prime_factor(std::size_t n) {
    std::size_t largest = 1;
    while (n > 1) {
        const std::size_t p = smallest_prime_factor(n);
        largest = std::max(largest, p);
        while (n % p == 0) n /= p;
    }
    return largest;
}

// roots[r] = exp(sign * 2*pi*i * r / n). Built as a two-level product so the
// table costs O(sqrt(n)) trig calls instead of n.
std::vector<cdouble> build_roots(std::size_t n, double sign) {
    std::vector<cdouble> roots(n);
    const std::size_t block = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::vector<cdouble> lo(block), hi((n + block - 1) / block + 1);
    for (std::size_t b = 0; b < block; ++b) {
        lo[b] = std::polar(1.0, sign * kTwoPi * static_cast<double>(b) / static_cast<double>(n));
    }
    for (std::size_t a = 0; a < hi.size(); ++a) {
        hi[a] = std::polar(1.0, sign * kTwoPi * static_cast<double>(a * block) / static_cast<double>(n));
    }
    for (std::size_t r = 0; r < n; ++r) {
        roots[r] = hi[r / block] * lo[r % block];
    }
    return roots;
}

// Recursive decimation-in-time step. Computes the DFT of
// x[0], x[stride], ..., x[(n-1)*stride] into out[0..n). `step` equals
// total/n so that roots[(step*r) % total] is the n-th root of unity to the
// power r.
void fft_rec(const cdouble* x, std::size_t stride, cdouble* out, std::size_t n,
             std::size_t step, std::size_t total, const cdouble* roots) {
    if (n == 1) {
        out[0] = x[0];
        return;
    }
    const std::size_t p = smallest_prime_factor(n);
    const std::size_t m = n / p;

    for (std::size_t j0 = 0; j0 < p; ++j0) {
        fft_rec(x + j0 * stride, stride * p, out + j0 * m, m, step * p, total, roots);
    }

    // Twiddle the sub-transforms in place: out[j0*m + k0] *= w^(j0*k0).
    for (std::size_t j0 = 1; j0 < p; ++j0) {
        std::size_t idx = 0;
        const std::size_t inc = (step * j0) % total;
        cdouble* row = out + j0 * m;
        for (std::size_t k0 = 0; k0 < m; ++k0) {
            row[k0] *= roots[idx];
            idx += inc;
            if (idx >= total) idx -= total;
        }
    }

    if (p == 2) {
        for (std::size_t k0 = 0; k0 < m; ++k0) {
            const cdouble a = out[k0];
            const cdouble b = out[m + k0];
            out[k0] = a + b;
            out[m + k0] = a - b;
        }
        return;
    }

    // Generic prime butterfly across the p slots {k0, k0+m, ..., k0+(p-1)m}.
    const std::size_t proot_step = total / p;
    std::vector<cdouble> proots(p);
    for (std::size_t r = 0; r < p; ++r) proots[r] = roots[proot_step * r];
    std::vector<cdouble> z(p);
    for (std::size_t k0 = 0; k0 < m; ++k0) {
        for (std::size_t j0 = 0; j0 < p; ++j0) z[j0] = out[j0 * m + k0];
        for (std::size_t k1 = 0; k1 < p; ++k1) {
            cdouble acc = z[0];
            std::size_t r = 0;
            for (std::size_t j0 = 1; j0 < p; ++j0) {
                r += k1;
                if (r >= p) r -= p;
                acc += z[j0] * proots[r];
            }
            out[k0 + m * k1] = acc;
        }
    }
}

std::vector<cdouble> transform_direct(std::span<const cdouble> x, double sign) {
    const std::size_t n = x.size();
    const std::vector<cdouble> roots = build_roots(n, sign);
    std::vector<cdouble> out(n);
    fft_rec(x.data(), 1, out.data(), n, 1, n, roots.data());
    return out;
}

// Smallest 7-smooth length >= n, so the convolution below runs on the cheap
// mixed-radix path with a ~2x pad instead of the up-to-4x power-of-two pad.
std::size_t next_smooth(std::size_t n) {
    for (std::size_t candidate = n;; ++candidate) {
        std::size_t rest = candidate;
        for (const std::size_t p : {2u, 3u, 5u, 7u}) {
            while (rest % p == 0) rest /= p;
        }
        if (rest == 1) return candidate;
    }
}

// Bluestein chirp-z: any length via three smooth-length transforms.
// The chirp exponent j^2/2 is reduced modulo 2N in integer arithmetic so the
// trig arguments stay small regardless of N.
std::vector<cdouble> transform_bluestein(std::span<const cdouble> x, double sign) {
    const std::size_t n = x.size();
    const std::size_t padded = next_smooth(2 * n - 1);

    std::vector<cdouble> chirp(n);
    const auto two_n = static_cast<unsigned long long>(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<unsigned long long>(j);
        const auto sq = (jj * jj) % two_n;
        chirp[j] = std::polar(1.0, sign * kPi * static_cast<double>(sq) / static_cast<double>(n));
    }

    std::vector<cdouble> a(padded, cdouble{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];

    std::vector<cdouble> b(padded, cdouble{0.0, 0.0});
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) {
        b[j] = std::conj(chirp[j]);
        b[padded - j] = std::conj(chirp[j]);
    }

    std::vector<cdouble> fa = transform_direct(a, -1.0);
    const std::vector<cdouble> fb = transform_direct(b, -1.0);
    for (std::size_t j = 0; j < padded; ++j) fa[j] *= fb[j];
    std::vector<cdouble> conv = transform_direct(fa, +1.0);

    std::vector<cdouble> out(n);
    const double scale = 1.0 / static_cast<double>(padded);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = conv[k] * scale * chirp[k];
    }
    return out;
}

} // namespace

std::vector<cdouble> fft(std::span<const cdouble> x, FftDirection direction) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("fft: empty input");
    const double sign = direction == FftDirection::forward ? -1.0 : +1.0;

    std::vector<cdouble> out;
    if (largest_prime_factor(n) <= kMaxDirectPrime) {
        out = transform_direct(x, sign);
    } else {
        out = transform_bluestein(x, sign);
    }

    if (direction == FftDirection::inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (cdouble& v : out) v *= scale;
    }
    return out;
}

std::vector<cdouble> naive_dft(std::span<const cdouble> x, FftDirection direction) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("naive_dft: empty input");
    const double sign = direction == FftDirection::forward ? -1.0 : +1.0;
    std::vector<cdouble> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cdouble acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const auto r = static_cast<unsigned long long>(j) * k % n;
            acc += x[j] * std::polar(1.0, sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n));
        }
        out[k] = direction == FftDirection::inverse ? acc / static_cast<double>(n) : acc;
    }
    return out;
}

} // namespace fourex
