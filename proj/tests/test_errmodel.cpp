#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "chebdiff/chebgrid.hpp"
#include "chebdiff/ddouble.hpp"
#include "chebdiff/errmodel.hpp"
#include "chebdiff/symfun.hpp"
#include "oracle.hpp"

using namespace chebdiff;

namespace {

constexpr double kU = kUnitRoundoff;

// Random smooth function on [-1,1]: Chebyshev series of degree n/2 with
// geometrically damped uniform coefficients.
std::vector<double> random_series(std::mt19937& rng, int degree) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> c(degree + 1);
    double damp = 1.0;
    for (int k = 0; k <= degree; ++k) {
        c[k] = unif(rng) * damp;
        damp *= 0.5;
    }
    return c;
}

double clenshaw(const std::vector<double>& c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = c.size(); k-- > 1;) {
        double b0 = c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + x * b1 - b2;
}

}  // namespace

TEST_CASE("rounding factor values and guards") {
    CHECK(gamma(0, kU) == 0.0);
    CHECK(gamma(1, kU) == doctest::Approx(1.1102230246251565e-16).epsilon(1e-12));
    CHECK(gamma(2, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma(15, kU) == doctest::Approx(15.0 * kU).epsilon(1e-10));
    CHECK_THROWS_AS((void)gamma(-1, kU), std::invalid_argument);
    CHECK_THROWS_AS((void)gamma(4, 0.25), std::domain_error);
    CHECK_THROWS_AS((void)gamma(5, 0.25), std::domain_error);
}

TEST_CASE("power sums about a pivot, with single-node deletion") {
    Grid g = make_grid({1.0, 0.0, -1.0});
    PowerSums ps = power_sums(g, 0);
    CHECK(ps.P[1] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(ps.P[2] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(ps.deleted[1][1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ps.deleted[2][1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ps.deleted[0][1] == ps.P[1]);  // placeholder copy at the pivot

    PowerSums mid = power_sums(g, 1);
    CHECK(mid.P[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mid.P[2] == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS((void)power_sums(g, 3), std::invalid_argument);
}

TEST_CASE("Newton recovery of elementary symmetric ratios") {
    Grid g = make_grid({1.0, 0.0, -1.0});
    ElemSymRatios es = newton_E_from_P(power_sums(g, 0), 2);
    CHECK(es.E[0] == 1.0);
    CHECK(es.E[1] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(es.E[2] == doctest::Approx(0.5).epsilon(1e-15));
    // deleted variant drops the middle node: single reciprocal 0.5
    CHECK(es.deleted[1][1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(es.deleted[1][2] == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS((void)newton_E_from_P(power_sums(g, 0), 0), std::invalid_argument);
    CHECK_THROWS_AS((void)newton_E_from_P(power_sums(g, 0), 5), std::invalid_argument);
}

TEST_CASE("Newton identities agree with direct symmetric functions") {
    for (int n : {4, 8, 16, 32, 64}) {
        ChebGrid cg = cheb_grid(n);
        PowerSums ps = power_sums(cg.grid, 0);
        ElemSymRatios es = newton_E_from_P(ps, 4);

        std::vector<double> recip;
        for (int j = 1; j <= n; ++j)
            recip.push_back(1.0 / (cg.nodes()[0] - cg.nodes()[j]));
        SymTable direct = elem_sym(recip);
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(es.E[m] == doctest::Approx(direct.S(m)).epsilon(1e-12));
        }

        for (int k : {1, n / 2, n}) {
            std::vector<double> del;
            for (int j = 1; j <= n; ++j)
                if (j != k) del.push_back(1.0 / (cg.nodes()[0] - cg.nodes()[j]));
            SymTable dk = elem_sym(del);
            for (int m = 1; m <= 3; ++m) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                CHECK(es.deleted[k][m] == doctest::Approx(dk.S(m)).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("edge power-sum asymptotics") {
    // leading coefficient for r = 1 is 2 zeta(2)/pi^2 = 1/3
    CHECK(power_sum_asym(1, 3) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(power_sum_asym(1, 12) == doctest::Approx(48.0).epsilon(1e-14));

    double pi = std::acos(-1.0);
    double expect = 2.0 * (pi * pi / 6.0 - 1.0) / (pi * pi) * 100.0;
    CHECK(power_sum_asym_deleted(1, 10, 1) == doctest::Approx(expect).epsilon(1e-13));

    // exact sums approach the asymptote
    ChebGrid cg = cheb_grid(256);
    PowerSums ps = power_sums(cg.grid, 0);
    CHECK(ps.P[1] == doctest::Approx(power_sum_asym(1, 256)).epsilon(0.02));
    CHECK(ps.P[2] == doctest::Approx(power_sum_asym(2, 256)).epsilon(0.02));

    CHECK_THROWS_AS((void)power_sum_asym(5, 8), std::invalid_argument);
    CHECK_THROWS_AS((void)power_sum_asym_deleted(1, 8, 0), std::invalid_argument);
}

TEST_CASE("rounding bound frozen values") {
    // interpolation on {1,-1}: both weight magnitudes 1/2, both deleted
    // first-order symmetric sums 1, so the node total is exactly 1
    Grid g2 = make_grid({1.0, -1.0});
    double fmax = 3.0;
    CHECK(bound_UR(g2, 0, 0.0, fmax, kU) ==
          doctest::Approx(gamma(10, kU) * fmax).epsilon(1e-14));

    // first derivative at the right edge, three Chebyshev nodes: the node
    // total collapses to n^2 = 4
    ChebGrid c2 = cheb_grid(2);
    CHECK(bound_UR(c2.grid, 1, 1.0, 1.0, kU) ==
          doctest::Approx(gamma(15, kU) * 4.0).epsilon(1e-13));

    CHECK_THROWS_AS((void)bound_UR(g2, 2, 0.0, 1.0, kU), std::invalid_argument);
}

TEST_CASE("edge first-derivative bound equals n^2 exactly") {
    for (int n : {2, 4, 8, 16, 32, 64}) {
        ChebGrid cg = cheb_grid(n);
        double b = bound_UR(cg.grid, 1, 1.0, 1.0, kU);
        double sum = b / gamma(6 * n + 3, kU);
        CAPTURE(n);
        CHECK(sum == doctest::Approx((double)n * n).epsilon(1e-11));
    }
}

TEST_CASE("decomposed bound matches the direct form") {
    for (int n : {2, 4, 8, 16, 32, 64, 128}) {
        for (int m = 1; m <= 4; ++m) {
            if (m > n) continue;
            ChebGrid cg = cheb_grid(n);
            double direct = bound_UR(cg.grid, m, 1.0, 2.0, kU);
            double decomp = bound_UR_decomposed(cg, m, 2.0, kU);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(decomp == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    ChebGrid big = cheb_grid(512);
    CHECK(bound_UR_decomposed(big, 1, 1.0, kU) ==
          doctest::Approx(bound_UR(big.grid, 1, 1.0, 1.0, kU)).epsilon(1e-10));
}

TEST_CASE("bound grows with derivative order") {
    ChebGrid cg = cheb_grid(16);
    double prev = 0.0;
    for (int m = 1; m <= 4; ++m) {
        double b = bound_UR(cg.grid, m, 1.0, 1.0, kU);
        CHECK(b > prev);
        prev = b;
    }
}

TEST_CASE("per-weight accumulation bound frozen values") {
    WeightSet one{{1.0, 0.0}, 0, 0.0};
    CHECK(bound_URprime(one, 2.0, kU) == doctest::Approx(2.0 * gamma(2, kU)).epsilon(1e-14));

    WeightSet w{{1.5, -2.0, 0.5}, 1, 0.0};
    double expect = 1.5 * gamma(2, kU) + 2.0 * gamma(3, kU) + 0.5 * gamma(4, kU);
    CHECK(bound_URprime(w, 1.0, kU) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("per-weight bound tracks u n^2 log n at the edge") {
    for (int n : {512, 1024}) {
        WeightSet row = edge_derivative_row(n);
        double b = bound_URprime(row, 1.0, kU);
        double ratio = b / (kU * n * (double)n * std::log((double)n));
        CAPTURE(n);
        CHECK(ratio > 0.7);
        CHECK(ratio < 0.95);
    }
}

TEST_CASE("asymptotic constants") {
    const auto& c = asym_constants();
    CHECK(std::fabs(c[1] - 0.9999995947) < 1e-9);
    CHECK(std::fabs(c[2] - 0.1666665316) < 1e-9);
    CHECK(std::fabs(c[3] - 0.0111110976) < 1e-9);
    CHECK(std::fabs(c[4] - 0.0003968248) < 1e-9);
    // closed forms 1, 1/6, 1/90, 1/2520
    CHECK(std::fabs(c[1] - 1.0) < 1e-6);
    CHECK(std::fabs(c[2] - 1.0 / 6.0) < 1e-6);
    CHECK(std::fabs(c[3] - 1.0 / 90.0) < 1e-6);
    CHECK(std::fabs(c[4] - 1.0 / 2520.0) < 1e-6);
}

TEST_CASE("asymptotic bound modes and agreement with the exact bound") {
    double std_v = asym_UR(1, 64, 1.0, kU, GammaMode::standard);
    double nu_v = asym_UR(1, 64, 1.0, kU, GammaMode::n_times_u);
    double u_v = asym_UR(1, 64, 1.0, kU, GammaMode::u_only);
    CHECK(std_v / u_v == doctest::Approx(gamma(6 * 64 + 3, kU) / kU).epsilon(1e-12));
    CHECK(nu_v / u_v == doctest::Approx(64.0).epsilon(1e-12));

    for (int m : {1, 2}) {
        ChebGrid cg = cheb_grid(512);
        double exact = bound_UR(cg.grid, m, 1.0, 1.0, kU);
        double asym = asym_UR(m, 512, 1.0, kU, GammaMode::standard);
        CAPTURE(m);
        CHECK(asym / exact > 0.9);
        CHECK(asym / exact < 1.1);
    }
}

TEST_CASE("measured rounding error stays below the bound") {
    std::mt19937 rng(20240817);
    int violations = 0;
    for (int n : {16, 64}) {
        ChebGrid cg = cheb_grid(n);
        std::vector<dd> xw(cg.nodes().size());
        for (size_t j = 0; j < xw.size(); ++j) xw[j] = dd(cg.nodes()[j]);
        for (int m : {1, 2}) {
            WeightSet ws = fd_weights(cg.grid, m, 1.0);
            auto lww = core::lagrange_weights_t<dd>(xw);
            auto ww = core::fd_weights_t<dd>(xw, m, dd(1.0), lww);
            for (int trial = 0; trial < 25; ++trial) {
                auto coef = random_series(rng, n / 2);
                std::vector<double> f(cg.nodes().size());
                std::vector<dd> fw(cg.nodes().size());
                double fmax = 0.0;
                for (size_t j = 0; j < f.size(); ++j) {
                    f[j] = clenshaw(coef, cg.nodes()[j]);
                    fw[j] = dd(f[j]);
                    fmax = std::max(fmax, std::fabs(f[j]));
                }
                double got = fd_apply(ws, f);
                dd ref = core::fd_apply_t<dd>(ww, fw);
                double err = std::fabs(to_double(dd_sub(dd(got), ref)));
                double bound = bound_UR(cg.grid, m, 1.0, fmax, kU);
                if (err > bound) ++violations;
            }
        }
    }
    CHECK(violations == 0);
}
