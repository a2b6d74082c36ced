#pragma once

#include <functional>

#include "weylcert/area_form.hpp"
#include "weylcert/embedding.hpp"

namespace weylcert {

// Central projection u = (x¹/x³, x²/x³) of an embedded surface, with its
// inverse lifted to jets.  On the u-chart the geodesics of the induced
// connection are straight lines.
struct FlatChart {
    Embedding3 source;
    Box domain;                  // working rectangle in u
    std::vector<double> base_u;  // basepoint, image of source.base_y

    // jets of the inverse map y(u); memoized per (point, order)
    std::function<std::array<Jet, 2>(const double* u, int order)> inverse;

    std::array<double, 2> project(const double* y) const;  // forward map
};

// guess(u) seeds the per-point Newton solve for y(u); exact closed forms are
// fine and make the solve a polish step.  Throws if Newton stalls or x³
// degenerates along the way.
FlatChart make_flat_chart(const Embedding3& emb, const Box& u_domain,
                          const std::vector<double>& base_u,
                          std::function<std::array<double, 2>(const double*)> guess);

// g ∘ y(u): a field on the y-chart viewed through the flat chart.
ScalarField pull_to_flat(const FlatChart& chart, const ScalarField& g);

// The surface package on the flat chart.  r̃(u) = f(u)·(u¹, u², 1), so the
// connection, second fundamental form, and area element have closed forms
// in f alone:
//   Γ^l_{jk} = (f_j δ^l_k + f_k δ^l_j)/f,  b_{jk} = f_{jk}/f − 2 f_j f_k/f²,
//   ρ = −b,  a = det[r̃, r̃₁, r̃₂] = f³.
struct FlatSurface {
    std::array<ScalarField, 3> r;  // embedding components as functions of u
    ScalarField f;                 // = r[2], positive on the domain
    SurfaceConnection conn;
    CovTensor2 b;
    CovTensor2 rho;
    AreaForm alpha;
    Box domain;
    std::vector<double> basepoint;
};

FlatSurface flatten(const FlatChart& chart);

}  // namespace weylcert
