#pragma once

#include <cmath>
#include <vector>

#include "chebdiff/chebgrid.hpp"

namespace chebdiff {

// Arcsine map parameters: alpha in [0,1) (0 = identity/degenerate limit),
// balance exponent beta, grid size n, unit roundoff u.
struct MapParams {
    double alpha = 0.0;
    double beta = 0.0;
    int n = 0;
    double u = kUnitRoundoff;
};

// Chebyshev grid in xi with physical abscissas x_j = g(xi_j); the map also
// enters differentiation through the chain rule.
struct MappedGrid {
    ChebGrid base;
    MapParams params;
    std::vector<double> x;
    const std::vector<double>& xi() const { return base.nodes(); }
};

MappedGrid mapped_grid(int n, double alpha, double beta = 0.0, double u = kUnitRoundoff);

// g(xi) = arcsin(alpha xi) / arcsin(alpha); identity at alpha = 0
double map_g(double xi, double alpha);

// analytic g', g'', g''' (order 1..3)
double map_dg(double xi, double alpha, int order);

// alpha solving ((1 - sqrt(1 - alpha^2))/alpha)^n = n^beta u via
// t = (n^beta u)^{-1/n}, alpha = 2/(t + 1/t); internal arithmetic in
// extended precision so the balance holds to ~1e-12 relative even at
// n = 4096.
double solve_alpha(int n, double beta, double u = kUnitRoundoff);

// |base^n - n^beta u| / (n^beta u) with base = (1 - sqrt(1-alpha^2))/alpha,
// evaluated in extended precision: diagnoses a caller-supplied alpha.
// Rounding alpha to working precision alone already moves base^n by
// ~111 n u relative near alpha = 1, so this form cannot certify 1e-12 at
// large n; use solve_alpha_residual for that.
double balance_residual(double alpha, int n, double beta, double u = kUnitRoundoff);

// Residual of the balance equation at the solver's own extended-precision
// alpha, before any rounding to working precision; base is recomputed from
// alpha through the square-root form, not through the closed-form identity
// that produced it.
double solve_alpha_residual(int n, double beta, double u = kUnitRoundoff);

// geometric coefficient-decay factor ((1 - sqrt(1-alpha^2))/alpha)^n,
// optionally with the n^{-3/2} modulation of the asymptotic estimate
double singularity_decay(double alpha, int n);
double singularity_decay_modulated(double alpha, int n);

enum class DiffMethod { weights, dct };

// m-th derivative of f given samples at the physical nodes x_j.  Default:
// m rounds of [spectral first derivative in xi, divide by g'(xi_j)].
// With direct_chain = true (m <= 3), a single backend pass computes
// F', F'', F''' in xi and combines them by the chain rule.
std::vector<double> mapped_diff(const std::vector<double>& samples, int m, const MappedGrid& mg,
                                DiffMethod method = DiffMethod::weights,
                                bool direct_chain = false);

}  // namespace chebdiff
