#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "chebdiff/ddprec.hpp"
#include "chebdiff/symfun.hpp"

namespace chebdiff {

// Parameters of one experiment sweep.
struct ExperimentConfig {
    std::string function = "sin2pi";  // sin2pi | sinscaled | linear
    double eta = 4.0;                 // points per wavelength for sinscaled
    int m = 1;
    int nmin = 8;
    int nmax = 64;
    int nstride = 2;
    std::string method = "weights";  // weights | dct
    bool mapped = false;
    std::vector<double> beta;  // one curve per entry (mapped sweeps)
    double u = kUnitRoundoff;
    unsigned long seed = 20240817;
    bool edge_only = true;  // measure at the right edge vs max over nodes
    std::string out;        // output path; empty writes to stdout
};

// Throws std::invalid_argument describing the first violated constraint.
void validate_config(const ExperimentConfig& cfg);

// One record of an error sweep.  Unmapped rows carry alpha = beta = 0;
// mapped rows carry NaN in the five model columns (the error models target
// unmapped edge differentiation).  flagged marks a parameter combination the
// solver rejected (payload NaN); it is informational, not a failure.
struct ErrorRow {
    int n = 0;
    double actual = 0.0;
    double UR = 0.0;
    double URprime = 0.0;
    double UR_asym = 0.0;
    double UD = 0.0;
    double UD_asym = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string method;
    bool flagged = false;
};

struct ErrorReport {
    ExperimentConfig config;
    std::vector<ErrorRow> rows;
};

// Test function selected by the config; sinscaled depends on n.
TestFunction make_function(const ExperimentConfig& cfg, int n);

// Unmapped error-vs-n sweep on Chebyshev grids with the full error model.
ErrorReport run_transition(const ExperimentConfig& cfg);

// Mapped differentiation sweep, one curve per beta; alpha is solved per n.
ErrorReport run_mapped(const ExperimentConfig& cfg);

// First n (within the report's rows, in order) where |U_D| < actual/10,
// i.e. where rounding error has taken over; -1 if never.
int transition_point(const ErrorReport& report);

// 0 when every non-flagged row has finite mandatory columns, else 2.
int numeric_status(const ErrorReport& report);

// CSV with '#' config-echo comments, a fixed header
// n,actual,UR,URprime,UR_asym,UD,UD_asym,alpha,beta,method and one row per
// record at 17 significant digits; byte-deterministic for a fixed config.
void emit_csv(const ErrorReport& report, std::ostream& os);
void emit_csv(const ErrorReport& report, const std::string& path);

// Reads rows back from the CSV field-for-field; comments and header skipped.
std::vector<ErrorRow> parse_csv(std::istream& is);
std::vector<ErrorRow> parse_csv_file(const std::string& path);

// Random smooth test functions: Chebyshev series of the given degree with
// coefficients uniform(-1,1) scaled by 2^-k, and Clenshaw evaluation.
std::vector<double> random_series(std::mt19937& rng, int degree);
double series_eval(const std::vector<double>& c, double x);

}  // namespace chebdiff
