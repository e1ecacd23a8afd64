#include "chebdiff/chebgrid.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace chebdiff {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void fft_inplace(std::vector<std::complex<double>>& a) {
    size_t N = a.size();
    for (size_t i = 1, j = 0; i < N; ++i) {
        size_t bit = N >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<std::complex<double>> tw(N / 2);
    for (size_t r = 0; r < N / 2; ++r) {
        double ang = -2.0 * kPi * (double)r / (double)N;
        tw[r] = {std::cos(ang), std::sin(ang)};
    }
    for (size_t len = 2; len <= N; len <<= 1) {
        size_t stride = N / len;
        for (size_t i = 0; i < N; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                auto u = a[i + k];
                auto v = a[i + k + len / 2] * tw[k * stride];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// K(v)_k = v_0/2 + sum_{j=1}^{n-1} v_j cos(jk pi / n) + (-1)^k v_n / 2
std::vector<double> cos_kernel(const std::vector<double>& v) {
    size_t n = v.size() - 1;
    std::vector<double> K(n + 1);
    if (is_pow2(n)) {
        // even extension of length 2n; Re(FFT)_k = 2 K_k
        std::vector<std::complex<double>> e(2 * n);
        for (size_t j = 0; j <= n; ++j) e[j] = v[j];
        for (size_t j = 1; j < n; ++j) e[2 * n - j] = v[j];
        fft_inplace(e);
        for (size_t k = 0; k <= n; ++k) K[k] = 0.5 * e[k].real();
        return K;
    }
    std::vector<double> tab(2 * n);
    for (size_t r = 0; r < 2 * n; ++r) tab[r] = std::cos(kPi * (double)r / (double)n);
    for (size_t k = 0; k <= n; ++k) {
        double acc = 0.5 * v[0];
        for (size_t j = 1; j < n; ++j) acc += v[j] * tab[(j * k) % (2 * n)];
        acc += (k % 2 == 0 ? 0.5 : -0.5) * v[n];
        K[k] = acc;
    }
    return K;
}

}  // namespace

ChebGrid cheb_grid(int n) {
    if (n < 2) throw std::invalid_argument("chebyshev grid needs n >= 2");
    std::vector<double> x(n + 1);
    for (int j = 0; j <= n / 2; ++j) {
        double v = std::cos(j * kPi / n);
        x[j] = v;
        x[n - j] = -v;
    }
    if (n % 2 == 0) x[n / 2] = 0.0;
    return ChebGrid{n, Grid{std::move(x)}};
}

double node_product(const ChebGrid& g, int ell) {
    if (ell < 0 || ell > g.n) throw std::invalid_argument("node index out of range");
    double mag = (ell == 0 || ell == g.n) ? 2.0 * g.n : (double)g.n;
    double v = std::ldexp(mag, -(g.n - 1));
    return (ell % 2 == 0) ? v : -v;
}

ChebSeries cheb_transform(const std::vector<double>& samples) {
    if (samples.size() < 3) throw std::invalid_argument("transform needs at least three samples");
    size_t n = samples.size() - 1;
    auto K = cos_kernel(samples);
    ChebSeries out{std::move(K)};
    for (size_t k = 0; k <= n; ++k) {
        double d = (k == 0 || k == n) ? 2.0 : 1.0;
        out.c[k] *= 2.0 / ((double)n * d);
    }
    return out;
}

std::vector<double> cheb_inverse(const ChebSeries& s) {
    if (s.c.size() < 3) throw std::invalid_argument("inverse needs at least three coefficients");
    std::vector<double> ext = s.c;
    ext.front() *= 2.0;
    ext.back() *= 2.0;
    return cos_kernel(ext);
}

ChebSeries cheb_diff_series(const ChebSeries& s) {
    size_t len = s.c.size();
    if (len <= 1) return ChebSeries{{0.0}};
    size_t n = len - 1;
    std::vector<double> b(n + 2, 0.0);
    for (size_t k = n; k >= 1; --k) b[k - 1] = b[k + 1] + 2.0 * (double)k * s.c[k];
    b.resize(n);
    b[0] *= 0.5;
    return ChebSeries{std::move(b)};
}

std::vector<double> diff_dct(const std::vector<double>& samples, int m) {
    if (m < 1) throw std::invalid_argument("derivative order must be at least one");
    size_t n = samples.size() - 1;
    ChebSeries c = cheb_transform(samples);
    for (int r = 0; r < m; ++r) c = cheb_diff_series(c);
    c.c.resize(n + 1, 0.0);
    return cheb_inverse(c);
}

std::vector<double> diff_weights(const std::vector<double>& samples, int m, const ChebGrid& g,
                                 bool repeated_first) {
    if (m > g.n) throw std::invalid_argument("derivative order exceeds degree");
    if ((int)samples.size() != g.n + 1)
        throw std::invalid_argument("sample count does not match grid");
    auto lw = lagrange_weights(g.grid);
    auto one_round = [&](const std::vector<double>& f, int order) {
        std::vector<double> out(g.n + 1);
        for (int j = 0; j <= g.n; ++j) {
            auto w = core::fd_weights_t(g.nodes(), order, g.nodes()[j], lw);
            out[j] = core::fd_apply_t(w, f);
        }
        return out;
    };
    if (!repeated_first) return one_round(samples, m);
    std::vector<double> f = samples;
    for (int r = 0; r < m; ++r) f = one_round(f, 1);
    return f;
}

WeightSet edge_derivative_row(int n) {
    if (n < 2) throw std::invalid_argument("chebyshev grid needs n >= 2");
    std::vector<double> w(n + 1);
    w[0] = (2.0 * n * n + 1.0) / 6.0;
    for (int k = 1; k <= n; ++k) {
        double s = std::sin(k * kPi / (2.0 * n));
        double ck = (k == n) ? 2.0 : 1.0;
        double v = (2.0 / ck) / (2.0 * s * s);
        w[k] = (k % 2 == 0) ? v : -v;
    }
    return WeightSet{std::move(w), 1, 1.0};
}

}  // namespace chebdiff
