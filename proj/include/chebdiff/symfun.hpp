#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebdiff {

inline constexpr double kUnitRoundoff = 0x1p-53;

// Ordered abscissas x_0..x_n, pairwise distinct, length >= 2.
struct Grid {
    std::vector<double> nodes;
    int n() const { return (int)nodes.size() - 1; }
};

Grid make_grid(std::vector<double> nodes);

// Differentiation weights w_{k,m} for evaluating d^m f / dx^m at eval_point.
struct WeightSet {
    std::vector<double> weights;
    int order = 0;
    double eval_point = 0.0;
};

// Elementary symmetric functions S_0..S_N of a value multiset.
struct SymTable {
    std::vector<double> values;
    double S(size_t m) const { return values.at(m); }
    size_t N() const { return values.size() - 1; }
};

class WeightOverflowError : public std::overflow_error {
  public:
    size_t index;
    explicit WeightOverflowError(size_t k)
        : std::overflow_error("lagrange weight overflow at node index " + std::to_string(k)),
          index(k) {}
};

SymTable elem_sym(const std::vector<double>& values);
std::vector<double> lagrange_weights(const Grid& grid);
WeightSet fd_weights(const Grid& grid, int m, double zeta);
double fd_apply(const WeightSet& ws, const std::vector<double>& samples);

namespace core {

// Triangular recurrence, left-to-right over inputs, descending order in
// place; on all-positive inputs every operation is an add or multiply of
// positive terms (no cancellation).
template <class T>
std::vector<T> elem_sym_t(const std::vector<T>& y) {
    size_t N = y.size();
    std::vector<T> s(N + 1, T(0.0));
    s[0] = T(1.0);
    for (size_t i = 1; i <= N; ++i) {
        size_t top = i < N ? i : N;
        for (size_t j = top; j >= 1; --j) s[j] = s[j] + y[i - 1] * s[j - 1];
    }
    return s;
}

// w_k = 1 / prod_{j != k} (x_k - x_j): n subtractions, n-1 multiplications,
// one division per weight.
template <class T>
std::vector<T> lagrange_weights_t(const std::vector<T>& x) {
    size_t np = x.size();
    std::vector<T> w(np);
    for (size_t k = 0; k < np; ++k) {
        T p(1.0);
        for (size_t j = 0; j < np; ++j)
            if (j != k) p = p * (x[k] - x[j]);
        w[k] = T(1.0) / p;
    }
    return w;
}

// Method of partial products.  With y_j = x_j - zeta, keep coefficients of
// t^0..t^m of the prefix polynomials L_{k-1}(t) = prod_{j<k}(t - y_j) and
// suffix polynomials R_{k+1}(t) = prod_{j>k}(t - y_j); the coefficient of
// t^m in L_{k-1} R_{k+1} is the convolution over split degrees (ascending),
// and w_{k,m} = (conv * m!) * w_k with the two scalings applied last, as
// two separate multiplications.  Lagrange weights are shift-invariant and
// are computed before the shift.
template <class T>
std::vector<T> fd_weights_t(const std::vector<T>& x, int m, T zeta, const std::vector<T>& lw) {
    size_t np = x.size();
    size_t mm = (size_t)m;
    std::vector<T> y(np);
    for (size_t j = 0; j < np; ++j) y[j] = x[j] - zeta;

    std::vector<std::vector<T>> pref(np + 1, std::vector<T>(mm + 1, T(0.0)));
    pref[0][0] = T(1.0);
    for (size_t k = 0; k < np; ++k) {
        for (size_t p = 0; p <= mm; ++p)
            pref[k + 1][p] = (p >= 1 ? pref[k][p - 1] : T(0.0)) - y[k] * pref[k][p];
    }
    std::vector<std::vector<T>> suff(np + 2, std::vector<T>(mm + 1, T(0.0)));
    suff[np][0] = T(1.0);
    for (size_t k = np; k-- > 0;) {
        for (size_t p = 0; p <= mm; ++p)
            suff[k][p] = (p >= 1 ? suff[k + 1][p - 1] : T(0.0)) - y[k] * suff[k + 1][p];
    }

    T fact(1.0);
    for (int i = 2; i <= m; ++i) fact = fact * T((double)i);

    std::vector<T> w(np);
    for (size_t k = 0; k < np; ++k) {
        T conv(0.0);
        for (size_t m1 = 0; m1 <= mm; ++m1)
            conv = conv + pref[k][m1] * suff[k + 1][mm - m1];
        w[k] = (conv * fact) * lw[k];
    }
    return w;
}

// Left-to-right accumulation, k = 0..n.
template <class T>
T fd_apply_t(const std::vector<T>& w, const std::vector<T>& samples) {
    T acc(0.0);
    for (size_t k = 0; k < w.size(); ++k) acc = acc + w[k] * samples[k];
    return acc;
}

}  // namespace core

}  // namespace chebdiff
