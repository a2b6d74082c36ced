#pragma once

#include <vector>

#include "weylcert/grid.hpp"
#include "weylcert/scalar_field.hpp"

namespace weylcert {

// Surface r(y) in a 3-space, given by component fields on a 2-chart.
// Usable as a centroaffine immersion only where det[r, r₁, r₂] ≠ 0
// (the position vector stays transverse to the tangent plane).
struct Embedding3 {
    std::array<ScalarField, 3> r;
    Box chart;                    // working rectangle in y
    std::vector<double> base_y;   // basepoint inside the rectangle
};

// min over the grid of |det[r, r₁, r₂]|
double transversality_margin(const Embedding3& emb, const std::vector<std::vector<double>>& grid);

// det[r, r₁, r₂] with jet entries, at one point
Jet radial_frame_det(const Embedding3& emb, const double* y, int order);

}  // namespace weylcert
