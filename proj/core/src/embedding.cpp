#include "weylcert/embedding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylcert {

Jet radial_frame_det(const Embedding3& emb, const double* y, int order) {
    // columns: r, ∂₁r, ∂₂r; rows: the three components
    Jet col[3][3] = {
        {emb.r[0](y, order + 1), emb.r[1](y, order + 1), emb.r[2](y, order + 1)},
        {Jet(2, order), Jet(2, order), Jet(2, order)},
        {Jet(2, order), Jet(2, order), Jet(2, order)},
    };
    for (int i = 0; i < 3; ++i) {
        col[1][i] = col[0][i].derivative(0);
        col[2][i] = col[0][i].derivative(1);
        col[0][i] = col[0][i].truncate(order);
    }
    Jet det(2, order);
    for (int p = 0; p < 3; ++p) {
        const int q = (p + 1) % 3, s = (p + 2) % 3;
        Jet minor(2, order);
        minor.add_scaled_product(col[1][q], col[2][s]);
        minor.add_scaled_product(col[1][s], col[2][q], -1.0);
        det.add_scaled_product(col[0][p], minor);
    }
    return det;
}

double transversality_margin(const Embedding3& emb, const std::vector<std::vector<double>>& grid) {
    if (grid.empty()) throw std::invalid_argument("transversality_margin: empty grid");
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& y : grid)
        margin = std::min(margin, std::abs(radial_frame_det(emb, y.data(), 0).value()));
    return margin;
}

}  // namespace weylcert
