#include "chebdiff/errmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chebdiff {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2r) for r = 1..4
constexpr double kZeta[5] = {0.0, kPi * kPi / 6.0,
                             kPi * kPi * kPi * kPi / 90.0,
                             kPi * kPi * kPi * kPi * kPi * kPi / 945.0,
                             kPi * kPi * kPi * kPi * kPi * kPi * kPi * kPi / 9450.0};

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

double gamma(int n, double u) {
    if (n < 0) throw std::invalid_argument("operation count must be nonnegative");
    double nu = (double)n * u;
    if (nu >= 1.0) throw std::domain_error("gamma factor requires n u < 1");
    return nu / (1.0 - nu);
}

PowerSums power_sums(const Grid& grid, int ell) {
    int n = grid.n();
    if (ell < 0 || ell > n) throw std::invalid_argument("pivot index out of range");
    PowerSums ps;
    ps.ell = ell;
    ps.deleted.assign(n + 1, {});
    for (int j = 0; j <= n; ++j) {
        if (j == ell) continue;
        double d = 1.0 / (grid.nodes[ell] - grid.nodes[j]);
        double p = 1.0;
        for (int r = 1; r <= 4; ++r) {
            p *= d;
            ps.P[r] += p;
        }
    }
    for (int k = 0; k <= n; ++k) {
        if (k == ell) {
            ps.deleted[k] = ps.P;
            continue;
        }
        double d = 1.0 / (grid.nodes[ell] - grid.nodes[k]);
        double p = 1.0;
        for (int r = 1; r <= 4; ++r) {
            p *= d;
            ps.deleted[k][r] = ps.P[r] - p;
        }
    }
    return ps;
}

ElemSymRatios newton_E_from_P(const PowerSums& ps, int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("order must be 1..4");
    auto fill = [m](const std::array<double, 5>& P) {
        std::array<double, 5> E{};
        E[0] = 1.0;
        if (m >= 1) E[1] = P[1];
        if (m >= 2) E[2] = (E[1] * P[1] - P[2]) / 2.0;
        if (m >= 3) E[3] = (E[2] * P[1] - E[1] * P[2] + P[3]) / 3.0;
        if (m >= 4) E[4] = (E[3] * P[1] - E[2] * P[2] + E[1] * P[3] - P[4]) / 4.0;
        return E;
    };
    ElemSymRatios out;
    out.E = fill(ps.P);
    out.deleted.reserve(ps.deleted.size());
    for (auto& Pk : ps.deleted) out.deleted.push_back(fill(Pk));
    return out;
}

double power_sum_asym(int r, int n) {
    if (r < 1 || r > 4) throw std::invalid_argument("order must be 1..4");
    double np = std::pow((double)n / kPi, 2 * r);
    return std::ldexp(kZeta[r] * np, r);
}

double power_sum_asym_deleted(int r, int n, int k) {
    if (r < 1 || r > 4) throw std::invalid_argument("order must be 1..4");
    if (k < 1) throw std::invalid_argument("deleted index must be positive");
    double np = std::pow((double)n / kPi, 2 * r);
    return std::ldexp((kZeta[r] - std::pow((double)k, -2.0 * r)) * np, r);
}

double bound_UR(const Grid& grid, int m, double zeta, double fmax, double u) {
    int n = grid.n();
    if (m < 0 || m > n) throw std::invalid_argument("derivative order out of range");
    auto lw = lagrange_weights(grid);
    std::vector<double> a(n + 1);
    for (int j = 0; j <= n; ++j) a[j] = std::fabs(grid.nodes[j] - zeta);
    double fact = factorial(m);
    double tot = 0.0;
    std::vector<double> rest(n);
    for (int k = 0; k <= n; ++k) {
        rest.clear();
        for (int j = 0; j <= n; ++j)
            if (j != k) rest.push_back(a[j]);
        SymTable S = elem_sym(rest);
        tot += fact * std::fabs(lw[k]) * S.S(n - m);
    }
    return gamma(6 * n - m + 4, u) * fmax * tot;
}

double bound_UR_decomposed(const ChebGrid& grid, int m, double fmax, double u) {
    int n = grid.n;
    if (m < 1 || m > 4) throw std::invalid_argument("order must be 1..4");
    PowerSums ps = power_sums(grid.grid, 0);
    ElemSymRatios es = newton_E_from_P(ps, m);
    double sum = es.E[m];
    for (int k = 1; k <= n; ++k) {
        double ratio = (k == n) ? 1.0 : 2.0;  // |W_0| / |W_k|
        sum += ratio * es.deleted[k][m - 1] / (1.0 - grid.nodes()[k]);
    }
    return gamma(6 * n - m + 4, u) * fmax * factorial(m) * sum;
}

double bound_URprime(const WeightSet& ws, double fmax, double u) {
    double tot = 0.0;
    for (size_t k = 0; k < ws.weights.size(); ++k)
        tot += std::fabs(ws.weights[k]) * gamma((int)k + 2, u);
    return fmax * tot;
}

const std::array<double, 5>& asym_constants() {
    static const std::array<double, 5> c = [] {
        constexpr long long K = 1000000;
        std::array<double, 5> out{};
        double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
        double pi2 = kPi * kPi, pi4 = pi2 * pi2, pi6 = pi4 * pi2, pi8 = pi4 * pi4;
        for (long long k = 1; k <= K; ++k) {
            double k2 = (double)k * (double)k;
            double q = pi2 * k2;
            s1 += 4.0 / q;
            s2 += (4.0 / q) * (1.0 / 3.0 - 2.0 / q);
            double k4 = k2 * k2, k6 = k4 * k2, k8 = k4 * k4;
            s3 += (2.0 / (15.0 * pi6 * k6)) * std::fabs(pi4 * k4 - 20.0 * pi2 * k2 + 120.0);
            s4 += (2.0 / (315.0 * pi8 * k8)) *
                  std::fabs(pi6 * k6 - 42.0 * pi4 * k4 + 840.0 * pi2 * k2 - 5040.0);
        }
        out[1] = 1.0 / 3.0 + s1;
        out[2] = 1.0 / 30.0 + s2;
        out[3] = 1.0 / 630.0 + s3;
        out[4] = 1.0 / 22680.0 + s4;
        return out;
    }();
    return c;
}

double asym_UR(int m, int n, double fmax, double u, GammaMode mode) {
    if (m < 1 || m > 4) throw std::invalid_argument("order must be 1..4");
    double mult;
    switch (mode) {
        case GammaMode::standard: mult = gamma(6 * n + 4 - m, u); break;
        case GammaMode::n_times_u: mult = (double)n * u; break;
        default: mult = u;
    }
    return mult * fmax * factorial(m) * asym_constants()[m] * std::pow((double)n, 2.0 * m);
}

}  // namespace chebdiff
