#pragma once

#include <cmath>

namespace fourex::detail {

/// Unevaluated double-double value (hi + lo, |lo| <= ulp(hi)/2). Just the
/// handful of operations the special-function series need; roughly 31
/// significant digits.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return DD{s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return DD{s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return DD{p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD sub(DD a, DD b) { return add(a, DD{-b.hi, -b.lo}); }

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD div(DD a, double b) {
    const double q1 = a.hi / b;
    DD r = sub(a, two_prod(q1, b));
    const double q2 = (r.hi + r.lo) / b;
    return quick_two_sum(q1, q2);
}

inline DD div(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = sub(a, mul(b, q1));
    const double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return add(q, DD{q3});
}

inline DD sqrt(DD a) {
    const double s = std::sqrt(a.hi);
    if (s == 0.0) return DD{0.0};
    // One Newton step: s + (a - s^2) / (2s).
    DD r = sub(a, two_prod(s, s));
    return quick_two_sum(s, (r.hi + r.lo) / (2.0 * s));
}

} // namespace fourex::detail
