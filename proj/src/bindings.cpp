#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebdiff/chebgrid.hpp"
#include "chebdiff/ddouble.hpp"
#include "chebdiff/ddprec.hpp"
#include "chebdiff/errmodel.hpp"
#include "chebdiff/expcli.hpp"
#include "chebdiff/kte_map.hpp"
#include "chebdiff/symfun.hpp"

namespace py = pybind11;

namespace {

chebdiff::DiffMethod method_from_name(const std::string& name) {
    if (name == "weights") return chebdiff::DiffMethod::weights;
    if (name == "dct") return chebdiff::DiffMethod::dct;
    throw std::invalid_argument("method must be 'weights' or 'dct'");
}

chebdiff::GammaMode mode_from_name(const std::string& name) {
    if (name == "standard") return chebdiff::GammaMode::standard;
    if (name == "n_times_u") return chebdiff::GammaMode::n_times_u;
    if (name == "u_only") return chebdiff::GammaMode::u_only;
    throw std::invalid_argument("mode must be 'standard', 'n_times_u' or 'u_only'");
}

chebdiff::TestFunction named_function(const std::string& function, double eta, int n) {
    if (function != "sin2pi" && function != "sinscaled" && function != "linear")
        throw std::invalid_argument("function must be 'sin2pi', 'sinscaled' or 'linear'");
    chebdiff::ExperimentConfig cfg;
    cfg.function = function;
    cfg.eta = eta;
    return chebdiff::make_function(cfg, n);
}

std::string report_csv(const chebdiff::ErrorReport& report) {
    std::ostringstream os;
    chebdiff::emit_csv(report, os);
    return os.str();
}

chebdiff::ExperimentConfig sweep_config(const std::string& function, double eta, int m, int nmin,
                                        int nmax, int nstride, const std::string& method, double u,
                                        unsigned long seed) {
    chebdiff::ExperimentConfig cfg;
    cfg.function = function;
    cfg.eta = eta;
    cfg.m = m;
    cfg.nmin = nmin;
    cfg.nmax = nmax;
    cfg.nstride = nstride;
    cfg.method = method;
    cfg.u = u;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(chebdiff, mod) {
    using namespace chebdiff;

    mod.doc() =
        "Finite-difference weights by partial products, Chebyshev and mapped "
        "spectral differentiation, and rounding/discretization error models.";
    mod.attr("unit_roundoff") = kUnitRoundoff;

    // --- grids and weights -------------------------------------------------
    mod.def(
        "cheb_nodes", [](int n) { return cheb_grid(n).grid.nodes; }, py::arg("n"),
        "Chebyshev points cos(j*pi/n), j = 0..n, descending from +1 to -1.");

    mod.def(
        "fd_weights",
        [](const std::vector<double>& nodes, int m, double zeta) {
            return fd_weights(make_grid(nodes), m, zeta).weights;
        },
        py::arg("nodes"), py::arg("m"), py::arg("zeta"),
        "Order-m differentiation weights at zeta for the given abscissas.");

    mod.def(
        "fd_apply",
        [](const std::vector<double>& weights, const std::vector<double>& samples) {
            WeightSet ws;
            ws.weights = weights;
            return fd_apply(ws, samples);
        },
        py::arg("weights"), py::arg("samples"),
        "Dot product of a weight row with function samples.");

    mod.def(
        "lagrange_weights",
        [](const std::vector<double>& nodes) { return lagrange_weights(make_grid(nodes)); },
        py::arg("nodes"), "Reciprocal barycentric weights prod_{j != l} (x_l - x_j).");

    mod.def(
        "elem_sym", [](const std::vector<double>& values) { return elem_sym(values).values; },
        py::arg("values"), "Elementary symmetric functions S_0..S_N of a value multiset.");

    mod.def(
        "edge_derivative_row", [](int n) { return edge_derivative_row(n).weights; }, py::arg("n"),
        "Closed-form first-derivative weight row at the Chebyshev edge x = 1.");

    // --- Chebyshev differentiation -----------------------------------------
    mod.def(
        "cheb_transform", [](const std::vector<double>& samples) { return cheb_transform(samples).c; },
        py::arg("samples"), "Chebyshev coefficients of the interpolant through node samples.");

    mod.def(
        "cheb_inverse",
        [](const std::vector<double>& coeffs) {
            ChebSeries s;
            s.c = coeffs;
            return cheb_inverse(s);
        },
        py::arg("coeffs"), "Node samples of a Chebyshev series.");

    mod.def("diff_dct", &diff_dct, py::arg("samples"), py::arg("m"),
            "m-th derivative samples at the Chebyshev nodes via coefficient recurrences.");

    mod.def(
        "diff_weights",
        [](const std::vector<double>& samples, int m, bool repeated_first) {
            ChebGrid g = cheb_grid((int)samples.size() - 1);
            return diff_weights(samples, m, g, repeated_first);
        },
        py::arg("samples"), py::arg("m"), py::arg("repeated_first") = false,
        "m-th derivative samples at the Chebyshev nodes via per-row weights.");

    // --- arcsine map --------------------------------------------------------
    mod.def("map_g", &map_g, py::arg("xi"), py::arg("alpha"),
            "Mapped abscissa arcsin(alpha*xi)/arcsin(alpha); identity at alpha = 0.");
    mod.def("map_dg", &map_dg, py::arg("xi"), py::arg("alpha"), py::arg("order"),
            "Derivative of the map of the given order (1..3).");
    mod.def("solve_alpha", &solve_alpha, py::arg("n"), py::arg("beta") = 0.0,
            py::arg("u") = kUnitRoundoff,
            "Mapping parameter balancing the truncation and rounding terms.");
    mod.def("solve_alpha_residual", &solve_alpha_residual, py::arg("n"), py::arg("beta") = 0.0,
            py::arg("u") = kUnitRoundoff, "Balance residual of the solved mapping parameter.");
    mod.def("balance_residual", &balance_residual, py::arg("alpha"), py::arg("n"),
            py::arg("beta") = 0.0, py::arg("u") = kUnitRoundoff,
            "Balance residual of an arbitrary mapping parameter.");

    mod.def(
        "mapped_nodes",
        [](int n, double alpha, double beta, double u) { return mapped_grid(n, alpha, beta, u).x; },
        py::arg("n"), py::arg("alpha"), py::arg("beta") = 0.0, py::arg("u") = kUnitRoundoff,
        "Physical abscissas g(xi_j) of the mapped Chebyshev grid.");

    mod.def(
        "mapped_diff",
        [](const std::vector<double>& samples, int m, double alpha, double beta, double u,
           const std::string& method, bool direct_chain) {
            MappedGrid mg = mapped_grid((int)samples.size() - 1, alpha, beta, u);
            return mapped_diff(samples, m, mg, method_from_name(method), direct_chain);
        },
        py::arg("samples"), py::arg("m"), py::arg("alpha"), py::arg("beta") = 0.0,
        py::arg("u") = kUnitRoundoff, py::arg("method") = "weights",
        py::arg("direct_chain") = false,
        "m-th derivative from samples at the mapped nodes, by the chain rule.");

    // --- rounding error model -----------------------------------------------
    mod.def(
        "gamma_factor", [](int n, double u) { return chebdiff::gamma(n, u); }, py::arg("n"),
        py::arg("u") = kUnitRoundoff, "Accumulated rounding factor n*u/(1 - n*u).");

    mod.def(
        "bound_ur",
        [](const std::vector<double>& nodes, int m, double zeta, double fmax, double u) {
            return bound_UR(make_grid(nodes), m, zeta, fmax, u);
        },
        py::arg("nodes"), py::arg("m"), py::arg("zeta"), py::arg("fmax"),
        py::arg("u") = kUnitRoundoff,
        "Rounding error bound for the weight computation at zeta.");

    mod.def(
        "bound_ur_decomposed",
        [](int n, int m, double fmax, double u) {
            return bound_UR_decomposed(cheb_grid(n), m, fmax, u);
        },
        py::arg("n"), py::arg("m"), py::arg("fmax"), py::arg("u") = kUnitRoundoff,
        "Rounding bound at the Chebyshev edge via the power-sum decomposition.");

    mod.def(
        "bound_urprime",
        [](const std::vector<double>& weights, double fmax, double u) {
            WeightSet ws;
            ws.weights = weights;
            return bound_URprime(ws, fmax, u);
        },
        py::arg("weights"), py::arg("fmax"), py::arg("u") = kUnitRoundoff,
        "Rounding bound for applying a precomputed weight row.");

    mod.def(
        "asym_constants",
        []() {
            const auto& c = asym_constants();
            return std::vector<double>(c.begin() + 1, c.end());
        },
        "Edge-asymptotics constants c_1..c_4.");

    mod.def(
        "asym_ur",
        [](int m, int n, double fmax, double u, const std::string& mode) {
            return asym_UR(m, n, fmax, u, mode_from_name(mode));
        },
        py::arg("m"), py::arg("n"), py::arg("fmax"), py::arg("u") = kUnitRoundoff,
        py::arg("mode") = "standard",
        "Asymptotic rounding bound c_m * m! * n^(2m) with the chosen multiplier.");

    mod.def("power_sum_asym", &power_sum_asym, py::arg("r"), py::arg("n"),
            "Asymptotic power sum of 1/(1 - x_k)^r over the Chebyshev grid.");
    mod.def("power_sum_asym_deleted", &power_sum_asym_deleted, py::arg("r"), py::arg("n"),
            py::arg("k"), "Asymptotic power sum with the k-th term removed.");

    // --- discretization error (extended precision) ---------------------------
    mod.def(
        "disc_error",
        [](int n, int m, const std::string& function, double eta) {
            TestFunction f = named_function(function, eta, n);
            DiscError de = disc_error(f, cheb_grid(n), m);
            std::vector<double> D(de.D.size());
            for (size_t j = 0; j < D.size(); ++j) D[j] = to_double(de.D[j]);
            py::dict out;
            out["value"] = de.value;
            out["D"] = D;
            out["reliable"] = de.reliable;
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("function") = "sin2pi", py::arg("eta") = 4.0,
        "Discretization error of the order-m edge derivative; returns value, "
        "divided differences D and a reliability flag.");

    mod.def(
        "disc_error_asym",
        [](int m, int n, const std::vector<double>& D) {
            std::vector<dd> Dd(D.size());
            for (size_t j = 0; j < D.size(); ++j) Dd[j] = dd(D[j]);
            return disc_error_asym(m, n, Dd);
        },
        py::arg("m"), py::arg("n"), py::arg("D"),
        "Large-n asymptotic form of the discretization error from the leading "
        "divided differences.");

    mod.def(
        "interp_error_est",
        [](int n, const std::string& function, double eta) {
            TestFunction f = named_function(function, eta, n);
            return interp_error_est(f, cheb_grid(n));
        },
        py::arg("n"), py::arg("function") = "sin2pi", py::arg("eta") = 4.0,
        "Order-of-magnitude estimate of the interpolation error near the edge.");

    // --- experiment sweeps ----------------------------------------------------
    mod.def(
        "run_transition",
        [](const std::string& function, double eta, int m, int nmin, int nmax, int nstride,
           const std::string& method, double u, unsigned long seed, bool edge_only) {
            ExperimentConfig cfg =
                sweep_config(function, eta, m, nmin, nmax, nstride, method, u, seed);
            cfg.edge_only = edge_only;
            ErrorReport report = run_transition(cfg);
            py::dict out;
            out["csv"] = report_csv(report);
            out["transition_point"] = transition_point(report);
            out["status"] = numeric_status(report);
            return out;
        },
        py::arg("function") = "sin2pi", py::arg("eta") = 4.0, py::arg("m") = 1,
        py::arg("nmin") = 8, py::arg("nmax") = 64, py::arg("nstride") = 2,
        py::arg("method") = "weights", py::arg("u") = kUnitRoundoff,
        py::arg("seed") = 20240817UL, py::arg("edge_only") = true,
        "Unmapped sweep comparing measured error against the bounds; returns "
        "the CSV text, the crossover n and a numeric status.");

    mod.def(
        "run_mapped",
        [](const std::string& function, double eta, int m, int nmin, int nmax, int nstride,
           const std::string& method, const std::vector<double>& beta, double u,
           unsigned long seed) {
            ExperimentConfig cfg =
                sweep_config(function, eta, m, nmin, nmax, nstride, method, u, seed);
            cfg.mapped = true;
            cfg.beta = beta;
            cfg.edge_only = false;
            ErrorReport report = run_mapped(cfg);
            py::dict out;
            out["csv"] = report_csv(report);
            out["status"] = numeric_status(report);
            return out;
        },
        py::arg("function") = "sin2pi", py::arg("eta") = 4.0, py::arg("m") = 1,
        py::arg("nmin") = 8, py::arg("nmax") = 64, py::arg("nstride") = 2,
        py::arg("method") = "weights", py::arg("beta") = std::vector<double>{0.0},
        py::arg("u") = kUnitRoundoff, py::arg("seed") = 20240817UL,
        "Mapped sweep with one balanced alpha per (beta, n); returns the CSV "
        "text and a numeric status.");
}
