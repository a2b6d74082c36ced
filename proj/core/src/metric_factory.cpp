#include "weylcert/metric_factory.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcert {

namespace {

Box chart_box(const Box& ydom, int n, double pv_half) {
    if (ydom.dim() != 2) throw std::invalid_argument("metric chart: y-domain must be 2-dimensional");
    Box out = ydom;
    for (int i = 2; i < n; ++i) {
        out.lo.push_back(-pv_half);
        out.hi.push_back(pv_half);
    }
    return out;
}

MetricChart empty_chart(int n, const Box& ydom, double pv_half) {
    MetricChart m;
    m.n = n;
    m.box = chart_box(ydom, n, pv_half);
    m.comp.assign(static_cast<std::size_t>(n) * n, ScalarField::constant(n, 0.0));
    return m;
}

// y-block quadratic form plus the 2 dp_j dy^j pairing shared by the
// extension metrics: yy[k][l] symmetric fields on the y-chart.
void fill_cotangent_blocks(MetricChart& m, const std::array<std::array<ScalarField, 2>, 2>& yy) {
    const int n = m.n;
    const ScalarField one = ScalarField::constant(n, 1.0);
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m.g(k, l) = lift_to_chart(yy[k][l], n);
        m.g(k, 2 + k) = one;
        m.g(2 + k, k) = one;
    }
}

}  // namespace

MetricChart riemann_extension(const SurfaceConnection& conn, const Box& ydom, double pv_half) {
    MetricChart m = empty_chart(4, ydom, pv_half);
    m.coords = {"y1", "y2", "p1", "p2"};
    m.signature = {-1, -1, 1, 1};

    const ScalarField p1 = ScalarField::coordinate(4, 2), p2 = ScalarField::coordinate(4, 3);
    std::array<std::array<ScalarField, 2>, 2> yy;
    for (int k = 0; k < 2; ++k)
        for (int l = k; l < 2; ++l)
            yy[k][l] = (p1 * lift_to_chart(conn.gamma[0][k][l], 4) +
                        p2 * lift_to_chart(conn.gamma[1][k][l], 4)) *
                       -2.0;
    yy[1][0] = yy[0][1];

    const int n = 4;
    const ScalarField one = ScalarField::constant(n, 1.0);
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m.g(k, l) = yy[k][l];
        m.g(k, 2 + k) = one;
        m.g(2 + k, k) = one;
    }
    return m;
}

MetricChart walker_metric(const CovTensor2& lambda, const Box& ydom, double pv_half) {
    MetricChart m = empty_chart(4, ydom, pv_half);
    m.coords = {"y1", "y2", "q1", "q2"};
    m.signature = {-1, -1, 1, 1};

    std::array<std::array<ScalarField, 2>, 2> yy;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) yy[k][l] = lambda.comp[k][l] * -2.0;
    fill_cotangent_blocks(m, yy);
    return m;
}

MetricChart build_g(const SurfaceConnection& conn, const CovTensor2& rho, const TauField& tau,
                    const InnerProductV& gv, int n, const Box& ydom, double pv_half) {
    if (n < 4) throw std::invalid_argument("build_g: dimension must be at least 4");
    if (n > kMaxJetDim) throw std::invalid_argument("build_g: dimension exceeds jet support");
    if (gv.size() != n - 4) throw std::invalid_argument("build_g: inner product size must be n-4");
    const std::vector<int> vsigns = gv.signs();  // throws when degenerate

    MetricChart m = empty_chart(n, ydom, pv_half);
    m.coords = {"y1", "y2", "p1", "p2"};
    for (int a = 0; a < n - 4; ++a) m.coords.push_back("v" + std::to_string(a + 1));
    m.signature = {-1, -1, 1, 1};
    m.signature.insert(m.signature.end(), vsigns.begin(), vsigns.end());
    std::sort(m.signature.begin(), m.signature.end());

    // theta(v) = gamma_ab v^a v^b as a field on the full chart
    ScalarField theta = ScalarField::constant(n, 0.0);
    for (int a = 0; a < n - 4; ++a)
        for (int b = 0; b < n - 4; ++b)
            if (gv.gamma(a, b) != 0.0)
                theta = theta + ScalarField::coordinate(n, 4 + a) *
                                    ScalarField::coordinate(n, 4 + b) * gv.gamma(a, b);

    const ScalarField p1 = ScalarField::coordinate(n, 2), p2 = ScalarField::coordinate(n, 3);
    const ScalarField one = ScalarField::constant(n, 1.0);
    for (int k = 0; k < 2; ++k) {
        for (int l = k; l < 2; ++l) {
            ScalarField c = (p1 * lift_to_chart(conn.gamma[0][k][l], n) +
                             p2 * lift_to_chart(conn.gamma[1][k][l], n)) *
                                -2.0 -
                            lift_to_chart(tau.comp[k][l], n) * 2.0 -
                            theta * lift_to_chart(rho.comp[k][l], n);
            m.g(k, l) = c;
            m.g(l, k) = c;
        }
        m.g(k, 2 + k) = one;
        m.g(2 + k, k) = one;
    }
    for (int a = 0; a < n - 4; ++a)
        for (int b = 0; b < n - 4; ++b)
            m.g(4 + a, 4 + b) = ScalarField::constant(n, gv.gamma(a, b));
    return m;
}

MetricChart conformal_rescale(const MetricChart& g, const ScalarField& f) {
    if (f.dim() != 2) throw std::invalid_argument("conformal_rescale: factor must live on the y-chart");
    Box ypart{{g.box.lo[0], g.box.lo[1]}, {g.box.hi[0], g.box.hi[1]}};
    for (const auto& y : grid_points(ypart, {5, 5}, 0.0))
        if (f(y, 0).value() <= 0.0)
            throw std::invalid_argument("conformal_rescale: factor must be positive");

    const ScalarField flift = lift_to_chart(f, g.n);
    const ScalarField inv_f2 = ScalarField::constant(g.n, 1.0) / (flift * flift);
    MetricChart out = g;
    for (int a = 0; a < g.n; ++a)
        for (int b = a; b < g.n; ++b) {
            out.g(a, b) = g.g(a, b) * inv_f2;
            out.g(b, a) = out.g(a, b);
        }
    return out;
}

MetricChart warped_product(const MetricChart& h, const ScalarField& f, const InnerProductV& gv,
                           double pv_half) {
    if (f.dim() != 2) throw std::invalid_argument("warped_product: factor must live on the y-chart");
    const int n = h.n + gv.size();
    if (n > kMaxJetDim) throw std::invalid_argument("warped_product: dimension exceeds jet support");
    const std::vector<int> vsigns = gv.signs();

    MetricChart m;
    m.n = n;
    m.box = h.box;
    for (int i = 0; i < gv.size(); ++i) {
        m.box.lo.push_back(-pv_half);
        m.box.hi.push_back(pv_half);
    }
    m.coords = h.coords;
    for (int a = 0; a < gv.size(); ++a) m.coords.push_back("u" + std::to_string(a + 1));
    m.signature = h.signature;
    m.signature.insert(m.signature.end(), vsigns.begin(), vsigns.end());
    std::sort(m.signature.begin(), m.signature.end());

    m.comp.assign(static_cast<std::size_t>(n) * n, ScalarField::constant(n, 0.0));
    for (int a = 0; a < h.n; ++a)
        for (int b = a; b < h.n; ++b) {
            m.g(a, b) = lift_to_chart(h.g(a, b), n);
            m.g(b, a) = m.g(a, b);
        }
    const ScalarField f2 = lift_to_chart(f * f, n);
    for (int a = 0; a < gv.size(); ++a)
        for (int b = 0; b < gv.size(); ++b)
            if (gv.gamma(a, b) != 0.0) m.g(h.n + a, h.n + b) = f2 * gv.gamma(a, b);
    return m;
}

}  // namespace weylcert
