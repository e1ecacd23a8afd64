#include "chebdiff/symfun.hpp"

#include <cmath>

namespace chebdiff {

Grid make_grid(std::vector<double> nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("grid needs at least two nodes");
    for (size_t k = 0; k < nodes.size(); ++k)
        for (size_t j = k + 1; j < nodes.size(); ++j)
            if (nodes[k] == nodes[j])
                throw std::invalid_argument("grid nodes must be pairwise distinct");
    return Grid{std::move(nodes)};
}

SymTable elem_sym(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("elem_sym needs at least one value");
    return SymTable{core::elem_sym_t(values)};
}

std::vector<double> lagrange_weights(const Grid& grid) {
    auto w = core::lagrange_weights_t(grid.nodes);
    for (size_t k = 0; k < w.size(); ++k)
        if (!std::isfinite(w[k])) throw WeightOverflowError(k);
    return w;
}

WeightSet fd_weights(const Grid& grid, int m, double zeta) {
    if (m < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (m > grid.n()) throw std::invalid_argument("derivative order exceeds degree");
    if (!std::isfinite(zeta)) throw std::invalid_argument("evaluation point must be finite");
    auto lw = lagrange_weights(grid);
    return WeightSet{core::fd_weights_t(grid.nodes, m, zeta, lw), m, zeta};
}

double fd_apply(const WeightSet& ws, const std::vector<double>& samples) {
    if (samples.size() != ws.weights.size())
        throw std::invalid_argument("sample count does not match weight count");
    return core::fd_apply_t(ws.weights, samples);
}

}  // namespace chebdiff
