#pragma once

#include <array>

#include "weylcert/scalar_field.hpp"
#include "weylcert/tensor_calc.hpp"

namespace weylcert {

// Torsion-free connection on a 2-chart: the six independent Γ^j_{kl}
// component fields, stored symmetric in (k, l) by construction.
struct SurfaceConnection {
    std::array<std::array<std::array<ScalarField, 2>, 2>, 2> gamma;
    int max_order = kMaxJetOrder;

    static SurfaceConnection flat();
    static SurfaceConnection from_fields(const ScalarField g[2][2][2], int max_order);

    const ScalarField& component(int j, int k, int l) const { return gamma[j][k][l]; }
};

// A 1-form and a 2-tensor on a 2-chart, as component fields.
struct OneForm2 {
    std::array<ScalarField, 2> comp;
};

enum class Sym2 { kGeneral, kSymmetric, kAntisymmetric };

struct CovTensor2 {
    std::array<std::array<ScalarField, 2>, 2> comp;
    Sym2 sym = Sym2::kGeneral;
};

// Jet tables at a point.
JetTensor christoffel_jets(const SurfaceConnection& conn, const double* y, int order);
JetTensor tensor_jets(const CovTensor2& t, const double* y, int order);
JetTensor oneform_jets(const OneForm2& xi, const double* y, int order);

// Curvature R_{jkl}{}^m stored as comp(j,k,l,m):
// R_{jkl}{}^m = d_k Γ^m_{jl} − d_j Γ^m_{kl} + Γ^m_{ks}Γ^s_{jl} − Γ^m_{js}Γ^s_{kl}.
JetTensor curvature2_jets(const SurfaceConnection& conn, const double* y, int order);
JetTensor curvature2_jets(const JetTensor& gamma);  // from existing Γ jets

// Ricci by the trace convention ρ_{jk} = R_{jsk}{}^s.
JetTensor ricci2_jets(const SurfaceConnection& conn, const double* y, int order);
JetTensor ricci2_jets(const JetTensor& gamma);

// Value-level tables per the operation contracts.
std::array<double, 16> curvature2(const SurfaceConnection& conn, const std::vector<double>& y);
std::array<double, 4> ricci2(const SurfaceConnection& conn, const std::vector<double>& y);

// Ricci as memoized component fields; jet support one order below conn's.
CovTensor2 ricci_field(const SurfaceConnection& conn);

}  // namespace weylcert
