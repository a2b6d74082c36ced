#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weylcert/curvature.hpp"
#include "weylcert/jet_linalg.hpp"
#include "weylcert/tensor_calc.hpp"

namespace weylcert {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double d : v) m = std::max(m, std::abs(d));
    return m;
}

// Flat table of (value, gradient) slots: everything past the Christoffel
// jets needs first derivatives only, and plain arrays keep the inner loops
// free of jet allocations.
class VGTable {
public:
    VGTable(int comps, int n) : stride_(n + 1), c_(static_cast<std::size_t>(comps) * (n + 1)) {}
    double* at(int i) { return c_.data() + static_cast<std::size_t>(i) * stride_; }
    const double* at(int i) const { return c_.data() + static_cast<std::size_t>(i) * stride_; }

private:
    int stride_;
    std::vector<double> c_;
};

// dst += s * a * b under the product rule, all (value, gradient) slots.
inline void vg_axpy(double* dst, const double* a, const double* b, double s, int n) {
    dst[0] += s * a[0] * b[0];
    for (int e = 1; e <= n; ++e) dst[e] += s * (a[0] * b[e] + a[e] * b[0]);
}

}  // namespace

double CurvaturePoint::max_weyl() const { return max_abs(weyl); }
double CurvaturePoint::max_dweyl() const { return max_abs(dweyl); }
double CurvaturePoint::max_driem() const { return max_abs(driem); }

double CurvaturePoint::symmetry_residual() const {
    double m = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm) {
                    const double v = r(j, k, l, mm);
                    m = std::max(m, std::abs(v + r(k, j, l, mm)));
                    m = std::max(m, std::abs(v + r(j, k, mm, l)));
                    m = std::max(m, std::abs(v - r(l, mm, j, k)));
                }
    return m;
}

double CurvaturePoint::bianchi_residual() const {
    double m = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm)
                    m = std::max(m,
                                 std::abs(r(j, k, l, mm) + r(k, l, j, mm) + r(l, j, k, mm)));
    return m;
}

double CurvaturePoint::weyl_trace_residual() const {
    double m = 0.0;
    for (int k = 0; k < n; ++k)
        for (int mm = 0; mm < n; ++mm) {
            double t = 0.0;
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) t += ginv(j, l) * w(j, k, l, mm);
            m = std::max(m, std::abs(t));
        }
    return m;
}

CurvaturePoint curvature_at(const MetricChart& m, const std::vector<double>& x) {
    const int n = m.n;
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("curvature_at: point dimension mismatch");
    if (m.max_order() < 3)
        throw std::invalid_argument("curvature_at: metric components need order-3 jets");

    const JetTensor gj = metric_jets(m, x.data(), 3);

    CurvaturePoint cp;
    cp.n = n;
    cp.x = x;
    cp.g = Eigen::MatrixXd(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cp.g(a, b) = gj(a, b).value();
    if (std::abs(cp.g.determinant()) < 1e-12)
        throw std::runtime_error("curvature_at: singular metric at point");

    // inverse at order 2: the Christoffel jets are the deepest consumer
    JetMatrix gm(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gm[a * n + b] = gj(a, b).truncate(2);
    const JetMatrix ginv = jet_mat_inverse(gm, n);
    cp.ginv = Eigen::MatrixXd(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cp.ginv(a, b) = ginv[a * n + b].value();

    // Christoffels at order 2 (their second derivatives feed grad R)
    JetTensor chris(n, 3, n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Jet acc(n, 2);
                for (int s = 0; s < n; ++s) {
                    const Jet t = gj(s, c).derivative(b) + gj(s, b).derivative(c) -
                                  gj(b, c).derivative(s);
                    acc.add_scaled_product(ginv[a * n + s], t, 0.5);
                }
                chris(a, b, c) = acc;
                chris(a, c, b) = acc;
            }
    cp.gamma.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) cp.gamma[(a * n + b) * n + c] = chris(a, b, c).value();

    const int vg = n + 1;
    const auto i2 = [n](int a, int b) { return a * n + b; };
    const auto i3 = [n](int a, int b, int c) { return (a * n + b) * n + c; };
    const auto i4 = [n](int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; };

    VGTable cvg(n * n * n, n), gvg(n * n, n), ivg(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double* gt = gvg.at(i2(a, b));
            double* it = ivg.at(i2(a, b));
            gt[0] = gj(a, b).value();
            it[0] = ginv[a * n + b].value();
            for (int e = 0; e < n; ++e) {
                gt[1 + e] = gj(a, b).deriv({e});
                it[1 + e] = ginv[a * n + b].deriv({e});
            }
            for (int c = 0; c < n; ++c) {
                double* ct = cvg.at(i3(a, b, c));
                ct[0] = chris(a, b, c).value();
                for (int e = 0; e < n; ++e) ct[1 + e] = chris(a, b, c).deriv({e});
            }
        }

    // R_{jkl}{}^m, then lowered, Ricci, scalar, Schouten, Weyl
    VGTable rup(n * n * n * n, n), rlow(n * n * n * n, n), wvg(n * n * n * n, n);
    VGTable ric(n * n, n), sig(n * n, n);
    double sj[1 + kMaxJetDim] = {0.0};

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm) {
                    double* t = rup.at(i4(j, k, l, mm));
                    const Jet& djl = chris(mm, j, l);
                    const Jet& dkl = chris(mm, k, l);
                    t[0] = djl.deriv({k}) - dkl.deriv({j});
                    for (int e = 0; e < n; ++e) t[1 + e] = djl.deriv({k, e}) - dkl.deriv({j, e});
                    for (int s = 0; s < n; ++s) {
                        vg_axpy(t, cvg.at(i3(mm, k, s)), cvg.at(i3(s, j, l)), 1.0, n);
                        vg_axpy(t, cvg.at(i3(mm, j, s)), cvg.at(i3(s, k, l)), -1.0, n);
                    }
                }

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm) {
                    double* t = rlow.at(i4(j, k, l, mm));
                    for (int s = 0; s < n; ++s)
                        vg_axpy(t, rup.at(i4(j, k, l, s)), gvg.at(i2(s, mm)), 1.0, n);
                }
            double* rt = ric.at(i2(j, k));
            for (int s = 0; s < n; ++s) {
                const double* u = rup.at(i4(j, s, k, s));
                for (int e = 0; e <= n; ++e) rt[e] += u[e];
            }
        }

    cp.ricci = Eigen::MatrixXd(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) cp.ricci(j, k) = ric.at(i2(j, k))[0];

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) vg_axpy(sj, ivg.at(i2(j, k)), ric.at(i2(j, k)), 1.0, n);
    cp.scal = sj[0];

    const double cs = 1.0 / (2.0 * n - 2.0);
    cp.schouten = Eigen::MatrixXd(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double* t = sig.at(i2(j, k));
            const double* rt = ric.at(i2(j, k));
            for (int e = 0; e <= n; ++e) t[e] = rt[e];
            vg_axpy(t, sj, gvg.at(i2(j, k)), -cs, n);
            cp.schouten(j, k) = t[0];
        }

    const double cw = 1.0 / (n - 2.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm) {
                    double* t = wvg.at(i4(j, k, l, mm));
                    const double* rt = rlow.at(i4(j, k, l, mm));
                    for (int e = 0; e <= n; ++e) t[e] = rt[e];
                    vg_axpy(t, gvg.at(i2(j, l)), sig.at(i2(k, mm)), -cw, n);
                    vg_axpy(t, gvg.at(i2(j, mm)), sig.at(i2(k, l)), cw, n);
                    vg_axpy(t, gvg.at(i2(k, l)), sig.at(i2(j, mm)), cw, n);
                    vg_axpy(t, gvg.at(i2(k, mm)), sig.at(i2(j, l)), -cw, n);
                }

    cp.riem.resize(static_cast<std::size_t>(n) * n * n * n);
    cp.weyl.resize(cp.riem.size());
    for (int i = 0; i < n * n * n * n; ++i) {
        cp.riem[i] = rlow.at(i)[0];
        cp.weyl[i] = wvg.at(i)[0];
    }

    // covariant derivatives straight from the (value, gradient) tables
    const auto G = [&cp, n](int a, int b, int c) { return cp.gamma[(a * n + b) * n + c]; };
    cp.dweyl.assign(static_cast<std::size_t>(n) * n * n * n * n, 0.0);
    cp.driem.assign(cp.dweyl.size(), 0.0);
    for (int e = 0; e < n; ++e)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int mm = 0; mm < n; ++mm) {
                        double dwv = wvg.at(i4(j, k, l, mm))[1 + e];
                        double drv = rlow.at(i4(j, k, l, mm))[1 + e];
                        for (int s = 0; s < n; ++s) {
                            dwv -= G(s, e, j) * wvg.at(i4(s, k, l, mm))[0] +
                                   G(s, e, k) * wvg.at(i4(j, s, l, mm))[0] +
                                   G(s, e, l) * wvg.at(i4(j, k, s, mm))[0] +
                                   G(s, e, mm) * wvg.at(i4(j, k, l, s))[0];
                            drv -= G(s, e, j) * rlow.at(i4(s, k, l, mm))[0] +
                                   G(s, e, k) * rlow.at(i4(j, s, l, mm))[0] +
                                   G(s, e, l) * rlow.at(i4(j, k, s, mm))[0] +
                                   G(s, e, mm) * rlow.at(i4(j, k, l, s))[0];
                        }
                        const std::size_t out = static_cast<std::size_t>(e) * n * n * n * n +
                                                i4(j, k, l, mm);
                        cp.dweyl[out] = dwv;
                        cp.driem[out] = drv;
                    }

    cp.dricci.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int e = 0; e < n; ++e)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double v = ric.at(i2(j, k))[1 + e];
                for (int s = 0; s < n; ++s)
                    v -= G(s, e, j) * ric.at(i2(s, k))[0] + G(s, e, k) * ric.at(i2(j, s))[0];
                cp.dricci[(e * n + j) * n + k] = v;
            }
    return cp;
}

}  // namespace weylcert
