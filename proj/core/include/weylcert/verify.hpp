#pragma once

#include <map>
#include <string>

#include "weylcert/classify.hpp"
#include "weylcert/curvature.hpp"
#include "weylcert/flat_chart.hpp"
#include "weylcert/report.hpp"

namespace weylcert {

// Surface data the metric was assembled from, needed to compare curvature
// of the big chart against its two-dimensional source.
struct MetricProvenance {
    SurfaceConnection conn;
    CovTensor2 rho;   // Ricci of conn
    AreaForm alpha;   // parallel area element that drove the tau solve
    ScalarField f;    // positive chart factor (conformal companion check)
    Box ydom;
    std::vector<double> basepoint;
    int epsilon = 1;
};

MetricProvenance provenance_from(const FlatSurface& s, int epsilon);

struct VerifyOptions {
    int y_samples = 5;      // per y axis
    int fiber_samples = 3;  // per p / v axis
    double margin = 0.1;    // relative inset from the chart box
    int plane_stride = 4;   // run the distribution checks every k-th point
    bool conformal_companion = true;
    std::map<std::string, double> tol;  // per-check tolerance overrides
};

// The full invariant battery for one assembled metric: curvature tensor
// symmetries, rank and sign of the Weyl operator, the parallelism, nullity
// and curvature degeneracy of the extracted plane, scalar flatness, the
// Codazzi pattern of the Ricci tensor, its identification with the surface
// Ricci tensor, the area-form identification of omega, and the two
// equivalences (local symmetry, Ricci recurrence) decided by measuring both
// the surface and the metric side.  Residuals are maxima over the sample
// grid.  Surface-side magnitudes inside [1e-8, 1e-5] leave the equivalence
// checks INDETERMINATE instead of guessing.
VerificationReport verify_class(const MetricChart& g, const MetricProvenance& prov,
                                const VerifyOptions& opt = {});

}  // namespace weylcert
