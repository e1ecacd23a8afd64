#pragma once

#include <stdexcept>
#include <vector>

#include "chebdiff/chebgrid.hpp"
#include "chebdiff/ddouble.hpp"

namespace chebdiff {

// Function with analytic derivatives, evaluable in working and extended
// precision.  derivative(0, x) is the value itself.
class DdFunction {
  public:
    virtual ~DdFunction() = default;
    virtual double value(double x) const = 0;
    virtual double derivative(int r, double x) const = 0;
    virtual dd value_dd(dd x) const = 0;
    virtual dd derivative_dd(int r, dd x) const = 0;
    virtual int max_order() const = 0;
};

// Built-in test functions: sinusoids sin(Kx) with an exact double wavenumber
// (both precisions evaluate the same mathematical function), and power-basis
// polynomials.  Sinusoid derivatives cycle with period four and are provided
// up to order six.
class TestFunction final : public DdFunction {
  public:
    static TestFunction sine(double wavenumber);
    // K = 2 pi
    static TestFunction sin_fixed();
    // K = n pi / eta, eta points per wavelength (default 4)
    static TestFunction sin_scaled(int n, double eta = 4.0);
    static TestFunction poly(std::vector<double> coeffs);

    double value(double x) const override;
    double derivative(int r, double x) const override;
    dd value_dd(dd x) const override;
    dd derivative_dd(int r, dd x) const override;
    int max_order() const override;

    double wavenumber() const { return k_; }

  private:
    enum class Kind { sine, poly };
    TestFunction() = default;
    Kind kind_ = Kind::sine;
    double k_ = 0.0;
    std::vector<double> coeffs_;
};

// Node with multiplicity for confluent divided differences.
struct ConfluentNode {
    double x = 0.0;
    int multiplicity = 1;
};

// Triangular divided-difference table in double-double.  Repeated nodes must
// be grouped adjacently; an entry whose argument window is a single repeated
// node x with multiplicity r+1 is seeded analytically as f^(r)(x)/r!.
class DivDiffTable {
  public:
    DivDiffTable(const DdFunction& f, const std::vector<ConfluentNode>& nodes);

    size_t size() const { return z_.size(); }
    double node(size_t i) const { return z_.at(i); }
    // f[z_i, ..., z_{i+k}]
    dd entry(size_t i, size_t k) const { return t_.at(k).at(i); }
    dd top() const { return t_.back().at(0); }

  private:
    std::vector<double> z_;
    std::vector<std::vector<dd>> t_;  // t_[k][i]
};

DivDiffTable divdiff(const DdFunction& f, const std::vector<ConfluentNode>& nodes);

// Discretization error of the order-m derivative rule at the right edge:
//   U_D = sum_j m! D_{j+2} S_{n+1-m+j}(1 - x_1, ..., 1 - x_n),
// where D_{j+2} = f[1 repeated j+2 times, x_1, ..., x_n].  The j = m term
// multiplies the (n+1)-st symmetric function of n values and vanishes.
// D holds D_{j+2} for j = 0..m; reliable clears once the value falls below
// the cancellation-noise floor of the extended-precision table, where the
// 2^-n-scaled terms can no longer be resolved.
struct DiscError {
    double value = 0.0;
    std::vector<dd> D;
    bool reliable = true;
};

DiscError disc_error(const DdFunction& f, const ChebGrid& grid, int m);

// Large-n asymptotic form of the discretization error for m = 1..4; D holds
// D_2, D_3, ... and at least the first m entries are read.
double disc_error_asym(int m, int n, const std::vector<dd>& D);

// Order-of-magnitude estimate of the maximum interpolation error between the
// two right-most nodes: |f[1, 1, x_1, ..., x_n]| / (n 2^n).
double interp_error_est(const DdFunction& f, const ChebGrid& grid);

}  // namespace chebdiff
