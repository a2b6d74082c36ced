#pragma once

#include <vector>

#include "weylcert/area_form.hpp"
#include "weylcert/grid.hpp"
#include "weylcert/surface_connection.hpp"

namespace weylcert {

// A 2-form valued in 2-forms on a surface has one essential component once
// the pattern A_{kjlm} = -A_{jklm} = A_{jkml} is imposed.
struct FourFormValue {
    double a1212 = 0.0;
};

// Twice-covariant symmetric tensor with order-3 jet support; the curvature
// of the metrics assembled downstream reads tau to third derivatives.
using TauField = CovTensor2;

// A_1212 of dd^D tau + tau wedge rho at one point:
//   tau_{22,11} - tau_{12,21} - tau_{21,12} + tau_{11,22}
//   + tau_22 R_11 - tau_12 R_21 - tau_21 R_12 + tau_11 R_22
// (1-based labels; comma indices apply left to right).  tau needs order-2
// jets at the point; rho enters undifferentiated.
FourFormValue L_apply(const SurfaceConnection& conn, const CovTensor2& rho, const CovTensor2& tau,
                      const std::vector<double>& point);

// Scalar reduction on twice-contravariant symmetric T:
//   T^{jk}_{,jk} + T^{jk} R_{jk}
// (double covariant divergence plus the Ricci pairing).
double F_apply(const SurfaceConnection& conn, const CovTensor2& rho, const CovTensor2& T,
               const std::vector<double>& point);

// tau' = tau + (xi_{k,j} + xi_{j,k}).  The shift is invisible to L_apply.
TauField gauge_shift(const SurfaceConnection& conn, const TauField& tau, const OneForm2& xi);

// Solves (dd^D tau + tau wedge rho) = epsilon alpha (x) alpha on a flat-chart
// rectangle.  conn is D expressed in that chart, f the positive factor with
// Gamma^l_jk = (f_j d^l_k + f_k d^l_j)/f, alpha a D-parallel area element.
// The component a/f^3 must be constant on the domain (checked to 1e-9).
// Gauge: tau_11 = tau_12 = 0; tau_22 = f^2 lambda with d1 d1 lambda =
// epsilon c^2 f^4, lambda integrated twice in u1 from the basepoint line
// with zero integration constants.  The residual of the defining equation
// is re-checked on a coarse grid (1e-6) before returning.
TauField solve_tau(const SurfaceConnection& conn, const ScalarField& f, const AreaForm& alpha,
                   int epsilon, const Box& domain, const std::vector<double>& basepoint);

}  // namespace weylcert
