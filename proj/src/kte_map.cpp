#include "chebdiff/kte_map.hpp"

#include <stdexcept>

namespace chebdiff {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw std::invalid_argument("mapping parameter must lie in [0,1)");
}

// 1 - alpha^2 xi^2 without cancellation near |alpha xi| = 1
double one_minus_sq(double axi) { return (1.0 - axi) * (1.0 + axi); }

}  // namespace

MappedGrid mapped_grid(int n, double alpha, double beta, double u) {
    check_alpha(alpha);
    if (!(u > 0.0) || u >= 1.0) throw std::invalid_argument("unit roundoff must lie in (0,1)");
    ChebGrid base = cheb_grid(n);
    std::vector<double> x(n + 1);
    for (int j = 0; j <= n; ++j) x[j] = map_g(base.nodes()[j], alpha);
    return MappedGrid{std::move(base), MapParams{alpha, beta, n, u}, std::move(x)};
}

double map_g(double xi, double alpha) {
    check_alpha(alpha);
    if (alpha == 0.0) return xi;
    double axi = alpha * xi;
    if (std::fabs(axi) > 1.0) throw std::domain_error("arcsin argument exceeds one");
    return std::asin(axi) / std::asin(alpha);
}

double map_dg(double xi, double alpha, int order) {
    check_alpha(alpha);
    if (order < 1 || order > 3) throw std::invalid_argument("map derivative order must be 1..3");
    if (alpha == 0.0) return order == 1 ? 1.0 : 0.0;
    double axi = alpha * xi;
    if (std::fabs(axi) > 1.0) throw std::domain_error("arcsin argument exceeds one");
    double C = alpha / std::asin(alpha);
    double s = one_minus_sq(axi);
    double rt = std::sqrt(s);
    switch (order) {
        case 1: return C / rt;
        case 2: return C * alpha * alpha * xi / (s * rt);
        default: return C * alpha * alpha * (1.0 + 2.0 * axi * axi) / (s * s * rt);
    }
}

namespace {

long double solve_alpha_ld(int n, double beta, double u) {
    if (n < 1) throw std::invalid_argument("grid size must be at least one");
    if (!(u > 0.0) || u >= 1.0) throw std::invalid_argument("unit roundoff must lie in (0,1)");
    long double logq = (long double)beta * std::log((long double)n) + std::log((long double)u);
    if (logq >= 0.0L) throw std::domain_error("no valid mapping parameter: n^beta u >= 1");
    long double t = std::exp(-logq / (long double)n);
    return 2.0L / (t + 1.0L / t);
}

long double residual_ld(long double a, int n, double beta, double u) {
    long double base = a / (1.0L + std::sqrt((1.0L - a) * (1.0L + a)));
    long double logq = (long double)beta * std::log((long double)n) + std::log((long double)u);
    long double r = std::exp((long double)n * std::log(base) - logq);
    return std::fabs(r - 1.0L);
}

}  // namespace

double solve_alpha(int n, double beta, double u) { return (double)solve_alpha_ld(n, beta, u); }

double balance_residual(double alpha, int n, double beta, double u) {
    check_alpha(alpha);
    if (alpha == 0.0) throw std::invalid_argument("degenerate map has no balance residual");
    return (double)residual_ld((long double)alpha, n, beta, u);
}

double solve_alpha_residual(int n, double beta, double u) {
    return (double)residual_ld(solve_alpha_ld(n, beta, u), n, beta, u);
}

double singularity_decay(double alpha, int n) {
    check_alpha(alpha);
    if (alpha == 0.0) return 0.0;
    double base = alpha / (1.0 + std::sqrt((1.0 - alpha) * (1.0 + alpha)));
    return std::pow(base, (double)n);
}

double singularity_decay_modulated(double alpha, int n) {
    return singularity_decay(alpha, n) * std::pow((double)n, -1.5);
}

std::vector<double> mapped_diff(const std::vector<double>& samples, int m, const MappedGrid& mg,
                                DiffMethod method, bool direct_chain) {
    if (m < 1 || m > 4) throw std::invalid_argument("mapped derivative order must be 1..4");
    if ((int)samples.size() != mg.base.n + 1)
        throw std::invalid_argument("sample count does not match grid");

    auto backend = [&](const std::vector<double>& f, int order) {
        return method == DiffMethod::dct ? diff_dct(f, order)
                                         : diff_weights(f, order, mg.base);
    };
    int n = mg.base.n;
    double alpha = mg.params.alpha;

    if (!direct_chain) {
        std::vector<double> f = samples;
        for (int r = 0; r < m; ++r) {
            f = backend(f, 1);
            for (int j = 0; j <= n; ++j) f[j] /= map_dg(mg.xi()[j], alpha, 1);
        }
        return f;
    }

    if (m > 3) throw std::invalid_argument("direct chain-rule mode supports m <= 3");
    std::vector<std::vector<double>> F(m);
    for (int r = 1; r <= m; ++r) F[r - 1] = backend(samples, r);
    std::vector<double> out(n + 1);
    for (int j = 0; j <= n; ++j) {
        double xi = mg.xi()[j];
        double g1 = map_dg(xi, alpha, 1);
        if (m == 1) {
            out[j] = F[0][j] / g1;
            continue;
        }
        double g2 = map_dg(xi, alpha, 2);
        if (m == 2) {
            out[j] = F[1][j] / (g1 * g1) - F[0][j] * g2 / (g1 * g1 * g1);
            continue;
        }
        double g3 = map_dg(xi, alpha, 3);
        double g1p2 = g1 * g1, g1p3 = g1p2 * g1, g1p4 = g1p3 * g1, g1p5 = g1p4 * g1;
        out[j] = F[2][j] / g1p3 - 3.0 * F[1][j] * g2 / g1p4 +
                 F[0][j] * (3.0 * g2 * g2 / g1p5 - g3 / g1p4);
    }
    return out;
}

}  // namespace chebdiff
