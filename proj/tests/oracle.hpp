#pragma once

// Test-side reference arithmetic, deliberately independent of the library
// under test: pairs of x86 extended long doubles (~38 significant digits),
// products split Dekker-style (no fma), plus reference algorithms built on
// top (symbolic Lagrange differentiation, barycentric interpolation,
// divided differences, Chebyshev series manipulation).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct wide {
    long double hi = 0.0L;
    long double lo = 0.0L;
    wide() = default;
    wide(long double h) : hi(h), lo(0.0L) {}
    wide(long double h, long double l) : hi(h), lo(l) {}
};

inline wide two_sum(long double a, long double b) {
    long double s = a + b;
    long double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline wide quick_sum(long double a, long double b) {
    long double s = a + b;
    return {s, b - (s - a)};
}

inline void split(long double a, long double& h, long double& l) {
    constexpr long double S = 4294967297.0L;  // 2^32 + 1 for 64-bit significand
    long double c = S * a;
    h = c - (c - a);
    l = a - h;
}

inline wide two_prod(long double a, long double b) {
    long double p = a * b;
    long double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    long double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

inline wide operator+(wide a, wide b) {
    wide s = two_sum(a.hi, b.hi);
    wide t = two_sum(a.lo, b.lo);
    wide r = quick_sum(s.hi, s.lo + t.hi);
    return quick_sum(r.hi, r.lo + t.lo);
}

inline wide operator-(wide a) { return {-a.hi, -a.lo}; }
inline wide operator-(wide a, wide b) { return a + (-b); }

inline wide operator*(wide a, wide b) {
    wide p = two_prod(a.hi, b.hi);
    return quick_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline wide operator/(wide a, wide b) {
    long double q1 = a.hi / b.hi;
    wide r = a - wide(q1) * b;
    long double q2 = r.hi / b.hi;
    r = r - wide(q2) * b;
    long double q3 = r.hi / b.hi;
    wide q = quick_sum(q1, q2);
    return q + wide(q3);
}

inline wide& operator+=(wide& a, wide b) { return a = a + b; }
inline wide& operator-=(wide& a, wide b) { return a = a - b; }
inline wide& operator*=(wide& a, wide b) { return a = a * b; }
inline wide& operator/=(wide& a, wide b) { return a = a / b; }

inline long double to_ld(wide a) { return a.hi + a.lo; }
inline wide wabs(wide a) { return a.hi < 0.0L || (a.hi == 0.0L && a.lo < 0.0L) ? -a : a; }

// sin/cos: pi/2 reduction with a 192-bit pi, Taylor to degree 35
namespace detail {
constexpr long double kPi0 = 0x0.c90fdaa22168c235p2L;
constexpr long double kPi1 = -0x0.ece675d1fc8f8cbbp-64L;
constexpr long double kPi2 = -0x0.b7ed8fbbacc19c60p-129L;
constexpr int kTerms = 18;

inline const wide* sin_coeffs() {
    static wide c[kTerms];
    static bool init = [] {
        c[0] = wide(1.0L);
        for (int i = 1; i < kTerms; ++i)
            c[i] = -c[i - 1] / wide((long double)(2 * i) * (2 * i + 1));
        return true;
    }();
    (void)init;
    return c;
}

inline const wide* cos_coeffs() {
    static wide c[kTerms];
    static bool init = [] {
        c[0] = wide(1.0L);
        for (int i = 1; i < kTerms; ++i)
            c[i] = -c[i - 1] / wide((long double)(2 * i - 1) * (2 * i));
        return true;
    }();
    (void)init;
    return c;
}

inline wide sin_taylor(wide t) {
    wide s = t * t;
    const wide* c = sin_coeffs();
    wide p = c[kTerms - 1];
    for (int i = kTerms - 2; i >= 0; --i) p = p * s + c[i];
    return t * p;
}

inline wide cos_taylor(wide t) {
    wide s = t * t;
    const wide* c = cos_coeffs();
    wide p = c[kTerms - 1];
    for (int i = kTerms - 2; i >= 0; --i) p = p * s + c[i];
    return p;
}

inline wide reduce(wide x, int& quadrant) {
    long double k = std::nearbyintl(to_ld(x) / (kPi0 / 2));
    wide t = x;
    t = t - two_prod(k, kPi0 / 2);
    t = t - two_prod(k, kPi1 / 2);
    t = t - two_prod(k, kPi2 / 2);
    long long q = (long long)k % 4;
    quadrant = (int)((q + 4) % 4);
    return t;
}
}  // namespace detail

inline wide wide_pi() { return {detail::kPi0, detail::kPi1}; }

inline wide wide_sin(wide x) {
    int q = 0;
    wide t = detail::reduce(x, q);
    switch (q) {
        case 0: return detail::sin_taylor(t);
        case 1: return detail::cos_taylor(t);
        case 2: return -detail::sin_taylor(t);
        default: return -detail::cos_taylor(t);
    }
}

inline wide wide_cos(wide x) {
    int q = 0;
    wide t = detail::reduce(x, q);
    switch (q) {
        case 0: return detail::cos_taylor(t);
        case 1: return -detail::sin_taylor(t);
        case 2: return -detail::cos_taylor(t);
        default: return detail::sin_taylor(t);
    }
}

// d^r/dx^r sin(Kx) = K^r sin(Kx + r pi/2)
inline wide wide_sin_deriv(wide K, int r, wide x) {
    wide arg = K * x + wide((long double)r) * (wide_pi() / wide(2.0L));
    wide kr(1.0L);
    for (int i = 0; i < r; ++i) kr *= K;
    return kr * wide_sin(arg);
}

// Chebyshev points cos(j pi / n), built pairwise so x_{n-j} = -x_j exactly
inline std::vector<double> cheb_nodes(int n) {
    std::vector<double> x(n + 1);
    for (int j = 0; j <= n / 2; ++j) {
        double v = std::cos(j * 3.14159265358979323846 / n);
        x[j] = v;
        x[n - j] = -v;
    }
    if (n % 2 == 0) x[n / 2] = 0.0;
    return x;
}

// Reference finite-difference weights by symbolic differentiation of the
// Lagrange basis: expand N_k(x) = prod_{j != k} (x - x_j), differentiate m
// times, Horner-evaluate at zeta, divide by N_k(x_k).
inline std::vector<wide> fd_weights(const std::vector<double>& x, int m, double zeta) {
    size_t np = x.size();
    std::vector<wide> out(np);
    for (size_t k = 0; k < np; ++k) {
        std::vector<wide> poly{wide(1.0L)};
        wide denom(1.0L);
        for (size_t j = 0; j < np; ++j) {
            if (j == k) continue;
            poly.push_back(wide(0.0L));
            for (size_t p = poly.size() - 1; p > 0; --p)
                poly[p] = poly[p - 1] - wide((long double)x[j]) * poly[p];
            poly[0] = -wide((long double)x[j]) * poly[0];
            denom *= wide((long double)x[k]) - wide((long double)x[j]);
        }
        for (int d = 0; d < m; ++d) {
            for (size_t p = 1; p < poly.size(); ++p)
                poly[p - 1] = wide((long double)p) * poly[p];
            poly.pop_back();
        }
        wide v(0.0L);
        for (size_t p = poly.size(); p-- > 0;)
            v = v * wide((long double)zeta) + poly[p];
        out[k] = v / denom;
    }
    return out;
}

// Elementary symmetric functions S_0..S_N
inline std::vector<wide> elem_sym(const std::vector<wide>& y) {
    std::vector<wide> s(y.size() + 1, wide(0.0L));
    s[0] = wide(1.0L);
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = std::min(i + 1, y.size()); j > 0; --j)
            s[j] += y[i] * s[j - 1];
    return s;
}

// Barycentric interpolation with weights computed from the actual nodes
struct Interpolant {
    std::vector<wide> nodes, vals, w;
    Interpolant(const std::vector<double>& x, const std::vector<wide>& f) {
        size_t np = x.size();
        for (size_t k = 0; k < np; ++k) {
            nodes.push_back(wide((long double)x[k]));
            vals.push_back(f[k]);
        }
        for (size_t k = 0; k < np; ++k) {
            wide p(1.0L);
            for (size_t j = 0; j < np; ++j)
                if (j != k) p *= nodes[k] - nodes[j];
            w.push_back(wide(1.0L) / p);
        }
    }
    wide eval(wide t) const {
        wide num(0.0L), den(0.0L);
        for (size_t k = 0; k < nodes.size(); ++k) {
            if (to_ld(wabs(t - nodes[k])) == 0.0L) return vals[k];
            wide c = w[k] / (t - nodes[k]);
            num += c * vals[k];
            den += c;
        }
        return num / den;
    }
};

// Chebyshev series: Clenshaw evaluation and derivative-coefficient recurrence
inline wide cheb_eval(const std::vector<wide>& c, wide t) {
    wide b1(0.0L), b2(0.0L);
    for (size_t k = c.size(); k-- > 1;) {
        wide b0 = wide(2.0L) * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

inline std::vector<wide> cheb_deriv(const std::vector<wide>& c) {
    size_t n = c.size() - 1;
    if (n == 0) return {wide(0.0L)};
    std::vector<wide> b(n + 2, wide(0.0L));
    for (size_t k = n; k >= 1; --k)
        b[k - 1] = b[k + 1] + wide((long double)(2 * k)) * c[k];
    b.resize(n);
    b[0] = b[0] * wide(0.5L);
    return b;
}

// Divided-difference table over distinct nodes
inline wide divdiff_top(const std::vector<wide>& zs, const std::vector<wide>& fs) {
    std::vector<wide> col = fs;
    size_t N = zs.size();
    for (size_t r = 1; r < N; ++r)
        for (size_t i = 0; i + r < N; ++i)
            col[i] = (col[i + 1] - col[i]) / (zs[i + r] - zs[i]);
    return col[0];
}

}  // namespace oracle
