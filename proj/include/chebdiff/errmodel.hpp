#pragma once

#include <array>
#include <vector>

#include "chebdiff/chebgrid.hpp"
#include "chebdiff/symfun.hpp"

namespace chebdiff {

// gamma_n = nu/(1-nu), the accumulated-rounding factor; requires nu < 1
double gamma(int n, double u = kUnitRoundoff);

// P_r^l = sum_{j != l} 1/(x_l - x_j)^r for r = 1..4, plus the k-deleted
// variants P_r^{l,k} = P_r^l - 1/(x_l - x_k)^r (exact by construction).
// deleted[l] is a placeholder copy of P (no self-deletion).
struct PowerSums {
    int ell = 0;
    std::array<double, 5> P{};                  // index by r, P[0] unused
    std::vector<std::array<double, 5>> deleted; // [k][r]
};

PowerSums power_sums(const Grid& grid, int ell);

// E_m^l (and k-deleted) for m = 0..4; E_0 = 1 always.
struct ElemSymRatios {
    std::array<double, 5> E{};
    std::vector<std::array<double, 5>> deleted; // [k][m]
};

// Newton identities with the 1/m normalization:
// E_1 = P_1, E_2 = (E_1 P_1 - P_2)/2, E_3 = (E_2 P_1 - E_1 P_2 + P_3)/3,
// E_4 = (E_3 P_1 - E_2 P_2 + E_1 P_3 - P_4)/4.
ElemSymRatios newton_E_from_P(const PowerSums& ps, int m);

// Chebyshev edge asymptotics of the power sums:
// P_r^0 ~ 2^r zeta(2r) n^{2r} / pi^{2r}, with zeta(2),zeta(4),zeta(6),zeta(8)
// as closed-form constants; the k-deleted variant replaces zeta(2r) by
// zeta(2r) - k^{-2r}.
double power_sum_asym(int r, int n);
double power_sum_asym_deleted(int r, int n, int k);

// Rounding-error bound of the full weight-generation-plus-application
// pipeline at zeta: gamma_{6n-m+4} |f| sum_k m! |w_k| S_{n-m}(deleted
// |x_j - zeta|).  All symmetric-function arguments are nonnegative, so the
// bound itself is computed cancellation-free.
double bound_UR(const Grid& grid, int m, double zeta, double fmax, double u = kUnitRoundoff);

// Same bound at the Chebyshev edge zeta = x_0 = 1 through the decomposition
// m! [E_m^0 + sum_k (|W_0|/|W_k|) E_{m-1}^{0,k} / (1 - x_k)], with the E's
// from Newton identities on exact power sums: an independent second path.
double bound_UR_decomposed(const ChebGrid& grid, int m, double fmax, double u = kUnitRoundoff);

// Rounding bound when the weights are treated as exact:
// |f| sum_k |w_{k,m}| gamma_{k+2}, accumulated in ascending k.
double bound_URprime(const WeightSet& ws, double fmax, double u = kUnitRoundoff);

// Startup-computed constants c_1..c_4 of the edge asymptotics (series
// summed to k = 1e6); c[0] unused.  Closed-form limits 1, 1/6, 1/90,
// 1/2520.
const std::array<double, 5>& asym_constants();

// Multiplier variants for the asymptotic bound: the standard gamma factor,
// or the cruder n*u / u scalings used when replotting the bound against
// measured data.
enum class GammaMode { standard, n_times_u, u_only };

// Asymptotic rounding bound at the Chebyshev edge:
// gamma_{6n+4-m} |f| m! c_m n^{2m} (standard mode).  The m! places the
// prediction on the same scale as bound_UR's exact sum.
double asym_UR(int m, int n, double fmax, double u = kUnitRoundoff,
               GammaMode mode = GammaMode::standard);

}  // namespace chebdiff
