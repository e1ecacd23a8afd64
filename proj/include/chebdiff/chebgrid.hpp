#pragma once

#include <vector>

#include "chebdiff/symfun.hpp"

namespace chebdiff {

// Chebyshev points x_j = cos(j pi / n), j = 0..n, descending +1 -> -1.
// Built pairwise so that x_{n-j} = -x_j holds exactly.
struct ChebGrid {
    int n = 0;
    Grid grid;
    const std::vector<double>& nodes() const { return grid.nodes; }
};

ChebGrid cheb_grid(int n);

// Coefficients c_0..c_n of sum c_k T_k(xi).
struct ChebSeries {
    std::vector<double> c;
};

// W_l = prod_{j != l} (x_l - x_j) by the closed form:
// (-1)^l 2n/2^{n-1} at the ends, (-1)^l n/2^{n-1} inside.
double node_product(const ChebGrid& g, int ell);

ChebSeries cheb_transform(const std::vector<double>& samples);
std::vector<double> cheb_inverse(const ChebSeries& s);
ChebSeries cheb_diff_series(const ChebSeries& s);

// Derivative samples at the nodes via transform -> m coefficient
// recurrences -> inverse transform.
std::vector<double> diff_dct(const std::vector<double>& samples, int m);

// Derivative samples via finite-difference weights at every node (the
// accurate matrix-equivalent method); rows share one set of Lagrange
// weights.  With repeated_first, applies the first-derivative operator m
// times instead of direct order-m weights.
std::vector<double> diff_weights(const std::vector<double>& samples, int m, const ChebGrid& g,
                                 bool repeated_first = false);

// Closed-form first-derivative weight row at zeta = x_0 = 1:
// w_0 = (2n^2+1)/6, w_k = (2/c_k)(-1)^k / (2 sin^2(k pi / 2n)), c_n = 2,
// c_k = 1 otherwise.  Valid for any n, including where lagrange_weights
// overflows.
WeightSet edge_derivative_row(int n);

}  // namespace chebdiff
