#include "chebdiff/ddprec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebdiff/symfun.hpp"

namespace chebdiff {

namespace {

constexpr int kSineOrders = 6;

double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

dd poly_eval_dd(const std::vector<double>& c, dd x) {
    dd v(0.0);
    for (size_t i = c.size(); i-- > 0;) v = v * x + dd(c[i]);
    return v;
}

// Coefficients of the r-th derivative in the power basis; the integer
// multipliers (i+r)!/i! stay exact in double for the sizes used here.
std::vector<double> poly_derive(const std::vector<double>& c, int r) {
    if ((size_t)r >= c.size()) return {0.0};
    std::vector<double> out(c.size() - r);
    for (size_t i = 0; i < out.size(); ++i) {
        double mult = 1.0;
        for (int q = 1; q <= r; ++q) mult *= (double)(i + q);
        out[i] = c[i + r] * mult;
    }
    return out;
}

}  // namespace

TestFunction TestFunction::sine(double wavenumber) {
    TestFunction f;
    f.kind_ = Kind::sine;
    f.k_ = wavenumber;
    return f;
}

TestFunction TestFunction::sin_fixed() { return sine(2.0 * std::numbers::pi); }

TestFunction TestFunction::sin_scaled(int n, double eta) {
    if (n < 1 || !(eta > 0.0)) throw std::invalid_argument("invalid sinusoid scaling");
    return sine((double)n * std::numbers::pi / eta);
}

TestFunction TestFunction::poly(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    TestFunction f;
    f.kind_ = Kind::poly;
    f.coeffs_ = std::move(coeffs);
    return f;
}

int TestFunction::max_order() const {
    return kind_ == Kind::sine ? kSineOrders : 1 << 20;
}

double TestFunction::value(double x) const {
    if (kind_ == Kind::sine) return std::sin(k_ * x);
    return poly_eval(coeffs_, x);
}

double TestFunction::derivative(int r, double x) const {
    if (r < 0 || r > max_order())
        throw std::invalid_argument("derivative order not available");
    if (kind_ == Kind::poly) return poly_eval(poly_derive(coeffs_, r), x);
    double kr = 1.0;
    for (int i = 0; i < r; ++i) kr *= k_;
    double t = k_ * x;
    switch (r % 4) {
        case 0: return kr * std::sin(t);
        case 1: return kr * std::cos(t);
        case 2: return -kr * std::sin(t);
        default: return -kr * std::cos(t);
    }
}

dd TestFunction::value_dd(dd x) const {
    if (kind_ == Kind::sine) return dd_sin(dd_mul(dd(k_), x));
    return poly_eval_dd(coeffs_, x);
}

dd TestFunction::derivative_dd(int r, dd x) const {
    if (r < 0 || r > max_order())
        throw std::invalid_argument("derivative order not available");
    if (kind_ == Kind::poly) return poly_eval_dd(poly_derive(coeffs_, r), x);
    dd kr(1.0);
    for (int i = 0; i < r; ++i) kr = kr * dd(k_);
    dd t = dd_mul(dd(k_), x);
    switch (r % 4) {
        case 0: return kr * dd_sin(t);
        case 1: return kr * dd_cos(t);
        case 2: return dd_neg(kr * dd_sin(t));
        default: return dd_neg(kr * dd_cos(t));
    }
}

DivDiffTable::DivDiffTable(const DdFunction& f, const std::vector<ConfluentNode>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("at least one node required");
    int max_mult = 0;
    for (const auto& g : nodes) {
        if (g.multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
        max_mult = std::max(max_mult, g.multiplicity);
    }
    if (max_mult - 1 > f.max_order())
        throw std::invalid_argument("confluency needs a derivative order beyond those available");
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a].x == nodes[b].x)
                throw std::invalid_argument("repeated nodes must be grouped adjacently");

    for (const auto& g : nodes)
        for (int r = 0; r < g.multiplicity; ++r) z_.push_back(g.x);
    size_t N = z_.size();

    std::vector<dd> fact(max_mult, dd(1.0));
    for (int k = 1; k < max_mult; ++k) fact[k] = fact[k - 1] * dd((double)k);

    t_.resize(N);
    t_[0].resize(N);
    for (size_t i = 0; i < N; ++i) t_[0][i] = f.value_dd(dd(z_[i]));
    for (size_t k = 1; k < N; ++k) {
        t_[k].resize(N - k);
        for (size_t i = 0; i + k < N; ++i) {
            if (z_[i + k] == z_[i])
                t_[k][i] = f.derivative_dd((int)k, dd(z_[i])) / fact[k];
            else
                t_[k][i] = (t_[k - 1][i + 1] - t_[k - 1][i]) / dd_sub(dd(z_[i + k]), dd(z_[i]));
        }
    }
}

DivDiffTable divdiff(const DdFunction& f, const std::vector<ConfluentNode>& nodes) {
    return DivDiffTable(f, nodes);
}

DiscError disc_error(const DdFunction& f, const ChebGrid& grid, int m) {
    int n = grid.n;
    if (m < 1 || m > 4) throw std::invalid_argument("order must be 1..4");
    if (n < m + 1) throw std::invalid_argument("grid too small for requested order");

    std::vector<ConfluentNode> nodes;
    nodes.push_back({grid.nodes()[0], m + 2});
    for (int j = 1; j <= n; ++j) nodes.push_back({grid.nodes()[j], 1});
    DivDiffTable table(f, nodes);

    DiscError out;
    out.D.resize(m + 1);
    for (int j = 0; j <= m; ++j) out.D[j] = table.entry(m - j, n + j + 1);

    std::vector<dd> vals(n);
    for (int j = 1; j <= n; ++j) vals[j - 1] = dd_sub(dd(1.0), dd(grid.nodes()[j]));
    std::vector<dd> S = core::elem_sym_t<dd>(vals);

    dd fact(1.0);
    for (int i = 2; i <= m; ++i) fact = fact * dd((double)i);

    dd acc(0.0);
    for (int j = 0; j < m; ++j)  // the j = m term carries S_{n+1} of n values = 0
        acc = acc + fact * out.D[j] * S[n + 1 - m + j];
    out.value = to_double(acc);

    // Below this floor the result is cancellation noise of the extended
    // precision table (noise saturates near 1e-30 * fmax * n^{2(m-1)}).
    double fa = 0.0;
    for (int j = 0; j <= n; ++j) fa = std::max(fa, std::fabs(f.value(grid.nodes()[j])));
    double floor = 1e-28 * fa * std::pow((double)n, 2.0 * (m - 1));
    out.reliable = std::isfinite(out.value) && std::fabs(out.value) > floor;
    return out;
}

double disc_error_asym(int m, int n, const std::vector<dd>& D) {
    if (m < 1 || m > 4) throw std::invalid_argument("order must be 1..4");
    if ((int)D.size() < m) throw std::invalid_argument("need divided differences up to order m+1");
    static const double coef[4][4] = {
        {4.0, 0.0, 0.0, 0.0},
        {8.0 / 3.0, 8.0, 0.0, 0.0},
        {4.0 / 5.0, 8.0, 24.0, 0.0},
        {16.0 / 105.0, 16.0 / 5.0, 32.0, 96.0},
    };
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
        double np = std::pow((double)n, 2 * (m - j) - 1);
        acc += coef[m - 1][j] * to_double(D[j]) * np;
    }
    return std::ldexp(acc, -n);
}

double interp_error_est(const DdFunction& f, const ChebGrid& grid) {
    int n = grid.n;
    std::vector<ConfluentNode> nodes;
    nodes.push_back({grid.nodes()[0], 2});
    for (int j = 1; j <= n; ++j) nodes.push_back({grid.nodes()[j], 1});
    DivDiffTable table(f, nodes);
    double d2 = std::fabs(to_double(table.top()));
    return std::ldexp(d2 / (double)n, -n);
}

}  // namespace chebdiff
