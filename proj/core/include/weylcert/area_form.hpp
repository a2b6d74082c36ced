#pragma once

#include "weylcert/grid.hpp"
#include "weylcert/surface_connection.hpp"

namespace weylcert {

// Area element on a 2-chart: the single component a = α₁₂, with α parallel
// for the connection it was built from (∂_j a = Γ^k_{jk} a).
struct AreaForm {
    ScalarField a;
    std::vector<double> basepoint;
    double base_value = 1.0;
};

// Primitive of a closed 1-form, exponentiated: h with d(log h) = t and
// h(basepoint) = base_value.  Value by L-path quadrature from the basepoint,
// higher jet entries assembled from the jets of t (so they are exact in t).
// base_value must be nonzero; its sign is carried through.
ScalarField exponential_of_potential(const ScalarField& t1, const ScalarField& t2,
                                     const std::vector<double>& basepoint, double base_value,
                                     int max_order);

// Integrates the trace Γ^k_{jk} from the basepoint along axis-aligned
// segments; a(y) = base_value · exp(∫ trace).  base_value must be nonzero;
// its sign fixes the area-element sign ambiguity on the chart.
AreaForm parallel_area_form(const SurfaceConnection& conn,
                            const std::vector<double>& basepoint, double base_value);

// Additive loop defect ∮ Γ^k_{jk} dy^j around the rectangle's boundary;
// exp of it is the multiplicative holonomy.  Near zero on equiaffine charts.
double area_form_loop_defect(const SurfaceConnection& conn, const Box& rect);

// Max over the grid of |∂_j a − Γ^k_{jk} a| (the D-parallelity residual).
double area_form_parallel_residual(const SurfaceConnection& conn, const AreaForm& alpha,
                                   const std::vector<std::vector<double>>& grid);

}  // namespace weylcert
