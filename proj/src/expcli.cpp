#include "chebdiff/expcli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chebdiff/chebgrid.hpp"
#include "chebdiff/errmodel.hpp"
#include "chebdiff/kte_map.hpp"

namespace chebdiff {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

DiffMethod method_from(const std::string& s) {
    if (s == "weights") return DiffMethod::weights;
    if (s == "dct") return DiffMethod::dct;
    throw std::invalid_argument("method must be weights or dct");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt(v[i]);
    }
    return s;
}

// max |approx - analytic| over the requested evaluation set
double measure_error(const std::vector<double>& approx, const DdFunction& f, int m,
                     const std::vector<double>& x, bool edge_only) {
    if (edge_only) return std::fabs(approx[0] - f.derivative(m, x[0]));
    double e = 0.0;
    for (size_t j = 0; j < x.size(); ++j)
        e = std::max(e, std::fabs(approx[j] - f.derivative(m, x[j])));
    return e;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.function != "sin2pi" && cfg.function != "sinscaled" && cfg.function != "linear")
        throw std::invalid_argument("function must be sin2pi, sinscaled, or linear");
    if (!(cfg.eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (cfg.m < 1 || cfg.m > 4) throw std::invalid_argument("m must be 1..4");
    if (cfg.nmin > cfg.nmax) throw std::invalid_argument("empty n range");
    if (cfg.nstride < 1) throw std::invalid_argument("nstride must be positive");
    if (cfg.nmin < cfg.m + 1 || cfg.nmin < 2)
        throw std::invalid_argument("nmin too small for the requested order");
    (void)method_from(cfg.method);
    if (cfg.mapped && cfg.beta.empty())
        throw std::invalid_argument("mapped sweeps need at least one beta");
    if (!(cfg.u > 0.0) || cfg.u >= 1.0) throw std::invalid_argument("u must be in (0, 1)");
}

TestFunction make_function(const ExperimentConfig& cfg, int n) {
    if (cfg.function == "sin2pi") return TestFunction::sin_fixed();
    if (cfg.function == "sinscaled") return TestFunction::sin_scaled(n, cfg.eta);
    return TestFunction::poly({0.0, 1.0});
}

ErrorReport run_transition(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.mapped) throw std::invalid_argument("transition sweeps are unmapped");
    DiffMethod method = method_from(cfg.method);

    ErrorReport report;
    report.config = cfg;
    for (int n = cfg.nmin; n <= cfg.nmax; n += cfg.nstride) {
        TestFunction f = make_function(cfg, n);
        ChebGrid grid = cheb_grid(n);
        std::vector<double> s(grid.nodes().size());
        double fmax = 0.0;
        for (size_t j = 0; j < s.size(); ++j) {
            s[j] = f.value(grid.nodes()[j]);
            fmax = std::max(fmax, std::fabs(s[j]));
        }

        WeightSet edge_ws = fd_weights(grid.grid, cfg.m, 1.0);
        std::vector<double> approx;
        if (method == DiffMethod::weights)
            approx = cfg.edge_only ? std::vector<double>{fd_apply(edge_ws, s)}
                                   : diff_weights(s, cfg.m, grid);
        else
            approx = diff_dct(s, cfg.m);

        ErrorRow row;
        row.n = n;
        row.method = cfg.method;
        row.actual = measure_error(approx, f, cfg.m, grid.nodes(), cfg.edge_only);
        row.UR = bound_UR(grid.grid, cfg.m, 1.0, fmax, cfg.u);
        row.URprime = bound_URprime(edge_ws, fmax, cfg.u);
        row.UR_asym = asym_UR(cfg.m, n, fmax, cfg.u, GammaMode::standard);
        DiscError de = disc_error(f, grid, cfg.m);
        row.UD = de.value;
        row.UD_asym = disc_error_asym(cfg.m, n, de.D);
        report.rows.push_back(std::move(row));
    }
    return report;
}

ErrorReport run_mapped(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (!cfg.mapped) throw std::invalid_argument("mapped sweeps require mapped = true");
    DiffMethod method = method_from(cfg.method);

    ErrorReport report;
    report.config = cfg;
    for (double b : cfg.beta) {
        for (int n = cfg.nmin; n <= cfg.nmax; n += cfg.nstride) {
            TestFunction f = make_function(cfg, n);
            ErrorRow row;
            row.n = n;
            row.beta = b;
            row.method = cfg.method;
            row.UR = row.URprime = row.UR_asym = row.UD = row.UD_asym = kNaN;
            double alpha;
            try {
                alpha = solve_alpha(n, b, cfg.u);
            } catch (const std::domain_error&) {
                row.alpha = kNaN;
                row.actual = kNaN;
                row.flagged = true;
                report.rows.push_back(std::move(row));
                continue;
            }
            row.alpha = alpha;
            MappedGrid mg = mapped_grid(n, alpha, b, cfg.u);
            std::vector<double> s(mg.x.size());
            for (size_t j = 0; j < s.size(); ++j) s[j] = f.value(mg.x[j]);
            std::vector<double> approx = mapped_diff(s, cfg.m, mg, method);
            row.actual = measure_error(approx, f, cfg.m, mg.x, cfg.edge_only);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

int transition_point(const ErrorReport& report) {
    for (const ErrorRow& r : report.rows)
        if (!r.flagged && std::fabs(r.UD) < r.actual / 10.0) return r.n;
    return -1;
}

int numeric_status(const ErrorReport& report) {
    for (const ErrorRow& r : report.rows) {
        if (r.flagged) continue;
        bool ok = std::isfinite(r.actual) && std::isfinite(r.alpha) && std::isfinite(r.beta);
        if (!report.config.mapped)
            ok = ok && std::isfinite(r.UR) && std::isfinite(r.URprime) &&
                 std::isfinite(r.UR_asym) && std::isfinite(r.UD) && std::isfinite(r.UD_asym);
        if (!ok) return 2;
    }
    return 0;
}

void emit_csv(const ErrorReport& report, std::ostream& os) {
    const ExperimentConfig& c = report.config;
    os << "# experiment: " << (c.mapped ? "mapped" : "transition") << "\n";
    os << "# function: " << c.function;
    if (c.function == "sinscaled") os << " eta=" << fmt(c.eta);
    os << "\n";
    os << "# m: " << c.m << "\n";
    os << "# n: " << c.nmin << ".." << c.nmax << " stride " << c.nstride << "\n";
    os << "# method: " << c.method << "\n";
    if (c.mapped) os << "# beta: " << fmt_list(c.beta) << "\n";
    os << "# u: " << fmt(c.u) << "\n";
    os << "# seed: " << c.seed << "\n";
    os << "# edge_only: " << (c.edge_only ? 1 : 0) << "\n";
    os << "n,actual,UR,URprime,UR_asym,UD,UD_asym,alpha,beta,method\n";
    for (const ErrorRow& r : report.rows) {
        os << r.n << ',' << fmt(r.actual) << ',' << fmt(r.UR) << ',' << fmt(r.URprime) << ','
           << fmt(r.UR_asym) << ',' << fmt(r.UD) << ',' << fmt(r.UD_asym) << ',' << fmt(r.alpha)
           << ',' << fmt(r.beta) << ',' << r.method << "\n";
    }
}

void emit_csv(const ErrorReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_csv(report, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ErrorRow> parse_csv(std::istream& is) {
    std::vector<ErrorRow> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.compare(0, 2, "n,") == 0) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 10) throw std::runtime_error("malformed row: " + line);
        ErrorRow r;
        r.n = std::stoi(fields[0]);
        r.actual = std::strtod(fields[1].c_str(), nullptr);
        r.UR = std::strtod(fields[2].c_str(), nullptr);
        r.URprime = std::strtod(fields[3].c_str(), nullptr);
        r.UR_asym = std::strtod(fields[4].c_str(), nullptr);
        r.UD = std::strtod(fields[5].c_str(), nullptr);
        r.UD_asym = std::strtod(fields[6].c_str(), nullptr);
        r.alpha = std::strtod(fields[7].c_str(), nullptr);
        r.beta = std::strtod(fields[8].c_str(), nullptr);
        r.method = fields[9];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ErrorRow> parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_csv(in);
}

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

double series_eval(const std::vector<double>& c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = c.size(); k-- > 1;) {
        double b0 = c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + x * b1 - b2;
}

}  // namespace chebdiff
