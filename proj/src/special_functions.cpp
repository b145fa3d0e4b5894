#include "fourex/special_functions.hpp"

#include <algorithm>
#include <cmath>

#include "fourex/detail/double_double.hpp"

namespace fourex {

namespace {

using detail::DD;

constexpr double kTwoOverSqrtPi = 1.1283791670955126; // 2/sqrt(pi)
constexpr double kSqrtPi = 1.7724538509055160273;

// Ai(0) and Ai'(0) to double-double precision.
constexpr DD kAiryAt0{3.55028053887817219e-01, 2.05233632436211994e-17};
constexpr DD kAiryPrimeAt0{-2.58819403792806824e-01, 2.52224311161083207e-17};

// 2*pi split for the oscillatory-phase reduction.
constexpr DD kTwoPiDD{6.283185307179586, 2.4492935982947064e-16};
constexpr double kQuarterPi = 0.7853981633974483;

// erf on [0, 4]: all-positive scaled series
// erf(x) = (2/sqrt(pi)) * exp(-x^2) * sum_n (2x^2)^n x / (1*3*...*(2n+1)).
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// erfc on x > 4 by the Laplace continued fraction
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz scheme.
double erfc_continued_fraction(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 300; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / (kSqrtPi * f);
}

// Maclaurin series for Ai = Ai(0)*f + Ai'(0)*g in double-double arithmetic;
// the two series grow to ~1e6 while the sum stays O(1), so plain doubles
// lose ~13 digits near the switch point.
double airy_maclaurin(double x) {
    const DD x3 = detail::mul(detail::mul(DD{x}, x), x);
    DD f_term{1.0};
    DD f_sum{1.0};
    DD g_term{x};
    DD g_sum{x};
    for (int k = 1; k < 300; ++k) {
        f_term = detail::div(detail::mul(f_term, x3), static_cast<double>(3 * k - 1) * (3 * k));
        g_term = detail::div(detail::mul(g_term, x3), static_cast<double>(3 * k) * (3 * k + 1));
        f_sum = detail::add(f_sum, f_term);
        g_sum = detail::add(g_sum, g_term);
        if (std::abs(f_term.hi) < 1e-34 * std::abs(f_sum.hi) &&
            std::abs(g_term.hi) < 1e-34 * (std::abs(g_sum.hi) + 1e-300)) {
            break;
        }
    }
    return detail::add(detail::mul(kAiryAt0, f_sum), detail::mul(kAiryPrimeAt0, g_sum)).value();
}

// zeta = (2/3)|x|^(3/2) in double-double; the oscillatory branch needs the
// phase to much better than one ulp of zeta.
DD airy_zeta(double ax) {
    const DD z{ax};
    return detail::div(detail::mul(detail::mul(detail::sqrt(z), z), 2.0), 3.0);
}

// Poincare coefficients u_k of the Airy expansions.
// u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)).
double next_u(double u, int k) {
    return u * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
           (216.0 * k * (2.0 * k - 1.0));
}

// Right tail: Ai(x) = exp(-zeta)/(2 sqrt(pi) x^(1/4)) * sum (-1)^k u_k zeta^-k.
double airy_asymptotic_positive(double x) {
    const double zeta = airy_zeta(x).value();
    double u = 1.0;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k < 80; ++k) {
        u = next_u(u, k);
        term = (k % 2 == 0 ? u : -u) / std::pow(zeta, k);
        if (std::abs(term) >= prev) break; // asymptotic tail started growing
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(-zeta) / (2.0 * kSqrtPi * std::pow(x, 0.25)) * sum;
}

// Left tail: Ai(-z) = (cos(zeta - pi/4) P + sin(zeta - pi/4) Q)/(sqrt(pi) z^(1/4)),
// P = sum (-1)^k u_{2k} zeta^-2k, Q = sum (-1)^k u_{2k+1} zeta^-(2k+1).
double airy_asymptotic_negative(double x) {
    const double z = -x;
    const DD zeta = airy_zeta(z);

    // Reduce the phase modulo 2*pi before dropping to double.
    const double cycles = std::floor(zeta.value() / kTwoPi);
    const DD reduced = detail::sub(zeta, detail::mul(kTwoPiDD, cycles));
    const double phase = reduced.value() - kQuarterPi;

    const double inv_zeta = 1.0 / zeta.value();
    double p_sum = 1.0;
    double q_sum = 0.0;
    double u = 1.0;
    double power = 1.0; // zeta^-k
    double prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        u = next_u(u, k);
        power *= inv_zeta;
        const double term = u * power;
        if (term >= prev) break;
        prev = term;
        const double signed_term = (k / 2) % 2 == 0 ? term : -term;
        if (k % 2 == 1) {
            q_sum += signed_term;
        } else {
            p_sum += signed_term;
        }
        if (term < 1e-18) break;
    }
    return (std::cos(phase) * p_sum + std::sin(phase) * q_sum) /
           (kSqrtPi * std::pow(z, 0.25));
}

} // namespace

double erf(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("erf: non-finite argument");
    const double ax = std::abs(x);
    double r;
    if (ax <= 4.0) {
        r = erf_series(ax);
    } else if (ax < 6.5) {
        r = 1.0 - erfc_continued_fraction(ax);
    } else {
        r = 1.0; // erfc < 4e-20 here
    }
    return x < 0.0 ? -r : r;
}

double airy_ai(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("airy_ai: non-finite argument");
    if (std::abs(x) > 160.0) {
        throw std::invalid_argument("airy_ai: argument outside supported range |x| <= 160");
    }
    if (std::abs(x) <= 8.0) return airy_maclaurin(x);
    return x > 0.0 ? airy_asymptotic_positive(x) : airy_asymptotic_negative(x);
}

namespace {

const std::vector<std::string>& catalog() {
    static const std::vector<std::string> names = {
        "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "f12",
        "exp_iomega"};
    return names;
}

std::string canonical_name(const std::string& name) {
    return name == "planewave" ? std::string("exp_iomega") : name;
}

} // namespace

cdouble test_function_value(const std::string& name, double t, double omega) {
    const std::string f = canonical_name(name);
    if (f == "f1") return erf(2.0 * t);
    if (f == "f2") return airy_ai(1.0 + 3.0 * t);
    if (f == "f3") return std::exp(std::sin(2.7 * kPi * t) + std::cos(kPi * t));
    if (f == "f4") return 1.0 / (1.0 + 100.0 * t * t);
    if (f == "f5") return std::cos(100.0 / (1.0 + 25.0 * t * t));
    if (f == "f6") return erf(100.0 * t);
    if (f == "f7") return std::cos(100.0 * t * t);
    if (f == "f8") return airy_ai(-66.0 - 70.0 * t);
    if (f == "f9") return std::exp(std::sin(65.5 * kPi * t - 27.0 * kPi) - std::cos(20.6 * kPi * t));
    if (f == "f10") return 1.0 / (1.01 - t * t);
    if (f == "f11") return airy_ai(150.0 * t);
    if (f == "f12") return std::sin(1500.0 * t * t);
    if (f == "exp_iomega") return std::polar(1.0, kPi * omega * t);
    throw std::invalid_argument("test_function: unknown function name '" + name + "'");
}

std::vector<cdouble> test_function(const std::string& name, std::span<const double> t,
                                   double omega) {
    std::vector<cdouble> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = test_function_value(name, t[i], omega);
    return out;
}

bool is_catalog_function(const std::string& name) {
    const std::string f = canonical_name(name);
    return std::find(catalog().begin(), catalog().end(), f) != catalog().end();
}

bool catalog_is_real(const std::string& name) {
    return is_catalog_function(name) && canonical_name(name) != "exp_iomega";
}

std::vector<std::string> catalog_names() { return catalog(); }

} // namespace fourex
