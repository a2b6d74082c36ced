#pragma once

#include "weylcert/embedding.hpp"
#include "weylcert/surface_connection.hpp"

namespace weylcert {

// Induced connection and second fundamental form of a radially transverse
// surface: r_{jk} = Γ^s_{jk} r_s + b_{jk} r.
struct CentroaffineOutput {
    SurfaceConnection conn;
    CovTensor2 b;
};

// Decomposes the second derivatives of r in the frame (r₁, r₂, r) by a
// per-point 3×3 solve with jet entries (one shared solve feeds all eight
// component fields).  Requires transversality margin > 1e-6 wherever
// evaluated; a singular frame throws.
CentroaffineOutput centroaffine_connection(const Embedding3& emb);

// max over grid points and components of |r_{jk} − Γ^s_{jk} r_s − b_{jk} r|
double centroaffine_reconstruction_residual(const Embedding3& emb, const CentroaffineOutput& ca,
                                            const std::vector<std::vector<double>>& grid);

// Recovery of the conformal factor on a projectively flat chart.  D̃ is the
// zero-component connection of the chart; D must differ from it by a
// projective change 2ξ⊙Id.  Then ξ_j = −Γ^k_{jk}/3, dξ = 0, and
// f = base_value·exp(−∫ξ) satisfies the Hessian equation D df = −f ρ^D.
struct RecoveredF {
    ScalarField f;
    OneForm2 xi;
    double off_trace_residual = 0.0;  // |Γ^l_{jk} − ξ_jδ^l_k − ξ_kδ^l_j| max
    double dxi_residual = 0.0;        // |∂₁ξ₂ − ∂₂ξ₁| max
};

RecoveredF recover_f(const SurfaceConnection& conn, const std::vector<double>& basepoint,
                     double base_value, const std::vector<std::vector<double>>& grid);

// max over grid of |∂_j∂_k f − Γ^s_{jk}∂_s f + f ρ_{jk}|
double hessian_equation_residual(const ScalarField& f, const SurfaceConnection& conn,
                                 const std::vector<std::vector<double>>& grid);

}  // namespace weylcert
