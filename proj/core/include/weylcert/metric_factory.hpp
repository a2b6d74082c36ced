#pragma once

#include "weylcert/metric_chart.hpp"
#include "weylcert/tau.hpp"

namespace weylcert {

// 2 dp_j dy^j - 2 p_j G^j_kl dy^k dy^l on (y1, y2, p1, p2); neutral
// signature, all vertical and horizontal coordinate vectors null.
MetricChart riemann_extension(const SurfaceConnection& conn, const Box& ydom,
                              double pv_half = 0.5);

// 2 dq_j dy^j - 2 lambda_kl dy^k dy^l on (y1, y2, q1, q2), lambda a
// symmetric tensor on the y-chart.
MetricChart walker_metric(const CovTensor2& lambda, const Box& ydom, double pv_half = 0.5);

// 2 dp_j dy^j - (2 p_j G^j_kl + 2 tau_kl + <v,v> R_kl) dy^k dy^l
// + gamma_ab dv^a dv^b on (y1, y2, p1, p2, v1..v^{n-4}).
// Signature (-,-,+,+) plus the signs of gamma.
MetricChart build_g(const SurfaceConnection& conn, const CovTensor2& rho, const TauField& tau,
                    const InnerProductV& gv, int n, const Box& ydom, double pv_half = 0.5);

// f^-2 g with f > 0 pulled back from the y-chart (checked on the y-part of
// g's box).
MetricChart conformal_rescale(const MetricChart& g, const ScalarField& f);

// Block metric h (+) f^2 gamma on h's coordinates followed by u^1..u^k,
// f > 0 pulled back from the y-chart.
MetricChart warped_product(const MetricChart& h, const ScalarField& f, const InnerProductV& gv,
                           double pv_half = 0.5);

}  // namespace weylcert
