#pragma once

#include <cmath>
#include <cstdlib>

namespace chebdiff {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2 (non-overlapping).
// Error-free transformations follow Dekker/Knuth; products use fma.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}
};

using dd = DoubleDouble;

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd fast_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    double err = b - (s - a);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

}  // namespace detail

inline dd dd_add(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    double c = s.lo + t.hi;
    dd r = detail::fast_two_sum(s.hi, c);
    c = r.lo + t.lo;
    return detail::fast_two_sum(r.hi, c);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    double t = a.hi * b.lo + a.lo * b.hi + p.lo;
    return detail::fast_two_sum(p.hi, t);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(dd(q1), b));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(dd(q2), b));
    double q3 = r.hi / b.hi;
    dd q = detail::fast_two_sum(q1, q2);
    return dd_add(q, dd(q3));
}

inline dd operator+(dd a, dd b) { return dd_add(a, b); }
inline dd operator-(dd a, dd b) { return dd_sub(a, b); }
inline dd operator*(dd a, dd b) { return dd_mul(a, b); }
inline dd operator/(dd a, dd b) { return dd_div(a, b); }
inline dd operator-(dd a) { return dd_neg(a); }
inline dd& operator+=(dd& a, dd b) { return a = a + b; }
inline dd& operator-=(dd& a, dd b) { return a = a - b; }
inline dd& operator*=(dd& a, dd b) { return a = a * b; }
inline dd& operator/=(dd& a, dd b) { return a = a / b; }

inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(dd a, dd b) { return !(a == b); }
inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }

inline double to_double(dd a) { return a.hi + a.lo; }

inline dd dd_abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? dd_neg(a) : a; }

inline dd dd_ldexp(dd a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

namespace detail {

// pi split into four non-overlapping doubles (sum accurate to ~2^-210)
inline constexpr double kPi0 = 3.141592653589793116e+00;
inline constexpr double kPi1 = 1.224646799147353207e-16;
inline constexpr double kPi2 = -2.994769809718339666e-33;
inline constexpr double kPi3 = 1.112454220863365282e-49;

// Taylor series on |t| <= pi/4 + eps.  Degree 29/28 keeps the truncation
// term below 2^-110.
inline constexpr int kSinTerms = 15;

inline const dd* sin_coeffs() {
    static dd c[kSinTerms] = {};
    static bool init = [] {
        c[0] = dd(1.0);
        for (int i = 1; i < kSinTerms; ++i)
            c[i] = dd_div(dd_neg(c[i - 1]), dd(double(2 * i) * double(2 * i + 1)));
        return true;
    }();
    (void)init;
    return c;
}

inline const dd* cos_coeffs() {
    static dd c[kSinTerms] = {};
    static bool init = [] {
        c[0] = dd(1.0);
        for (int i = 1; i < kSinTerms; ++i)
            c[i] = dd_div(dd_neg(c[i - 1]), dd(double(2 * i - 1) * double(2 * i)));
        return true;
    }();
    (void)init;
    return c;
}

inline dd sin_taylor(dd t) {
    dd s = dd_mul(t, t);
    const dd* c = sin_coeffs();
    dd p = c[kSinTerms - 1];
    for (int i = kSinTerms - 2; i >= 0; --i) p = dd_add(dd_mul(p, s), c[i]);
    return dd_mul(t, p);
}

inline dd cos_taylor(dd t) {
    dd s = dd_mul(t, t);
    const dd* c = cos_coeffs();
    dd p = c[kSinTerms - 1];
    for (int i = kSinTerms - 2; i >= 0; --i) p = dd_add(dd_mul(p, s), c[i]);
    return p;
}

// t = x - k*(pi/2), |t| <= pi/4; quadrant = k mod 4
inline dd reduce_pi_half(dd x, int& quadrant) {
    double k = std::nearbyint(to_double(x) / (kPi0 / 2));
    dd t = x;
    t = dd_sub(t, two_prod(k, kPi0 / 2));
    t = dd_sub(t, two_prod(k, kPi1 / 2));
    t = dd_sub(t, two_prod(k, kPi2 / 2));
    t = dd_sub(t, two_prod(k, kPi3 / 2));
    long long q = (long long)k % 4;
    quadrant = (int)((q + 4) % 4);
    return t;
}

}  // namespace detail

inline dd dd_sin(dd x) {
    int q = 0;
    dd t = detail::reduce_pi_half(x, q);
    switch (q) {
        case 0: return detail::sin_taylor(t);
        case 1: return detail::cos_taylor(t);
        case 2: return dd_neg(detail::sin_taylor(t));
        default: return dd_neg(detail::cos_taylor(t));
    }
}

inline dd dd_cos(dd x) {
    int q = 0;
    dd t = detail::reduce_pi_half(x, q);
    switch (q) {
        case 0: return detail::cos_taylor(t);
        case 1: return dd_neg(detail::sin_taylor(t));
        case 2: return dd_neg(detail::cos_taylor(t));
        default: return detail::sin_taylor(t);
    }
}

inline dd dd_pi() { return {detail::kPi0, detail::kPi1}; }

}  // namespace chebdiff
