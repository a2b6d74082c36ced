#include "weylcert/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcert {

namespace {

// 15-point Kronrod abscissa magnitudes and weights;
// the 7 Gauss nodes are the even-indexed entries.
constexpr int kNK = 8;  // nonnegative nodes
constexpr double kx[kNK] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kw[kNK] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double gw[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Workspace {
    const std::function<void(double, double*)>* f;
    int m;
    double abs_tol;
    double total_len;
    int max_depth;
    std::vector<double> buf;  // 2m scratch for one symmetric node pair
};

// One K15/G7 evaluation on [a,b]; appends the K15 value into acc and
// returns the error estimate (max-abs K15 - G7 component difference).
double kronrod_panel(Workspace& ws, double a, double b, std::vector<double>& k15) {
    const int m = ws.m;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::vector<double> g7(m, 0.0);
    k15.assign(m, 0.0);
    double* lo = ws.buf.data();
    double* hi = ws.buf.data() + m;
    for (int i = 0; i < kNK; ++i) {
        const double x = kx[i];
        (*ws.f)(c - h * x, lo);
        if (i < kNK - 1) {
            (*ws.f)(c + h * x, hi);
        } else {
            for (int j = 0; j < m; ++j) hi[j] = 0.0;  // center node counted once
        }
        for (int j = 0; j < m; ++j) k15[j] += kw[i] * (lo[j] + hi[j]);
        if (i % 2 == 1) {
            const double w = gw[i / 2];
            for (int j = 0; j < m; ++j) g7[j] += w * (lo[j] + hi[j]);
        }
    }
    // center node belongs to both rules (index 7, odd -> part of G7)
    double err = 0.0;
    for (int j = 0; j < m; ++j) {
        k15[j] *= h;
        g7[j] *= h;
        err = std::max(err, std::abs(k15[j] - g7[j]));
    }
    return err;
}

void adapt(Workspace& ws, double a, double b, int depth, std::vector<double>& acc) {
    std::vector<double> k15;
    const double err = kronrod_panel(ws, a, b, k15);
    const double budget = ws.abs_tol * std::max((b - a) / ws.total_len, 1e-3);
    if (err <= budget || depth >= ws.max_depth) {
        if (err > budget)
            throw std::runtime_error("integrate: failed to reach tolerance");
        for (int j = 0; j < ws.m; ++j) acc[j] += k15[j];
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(ws, a, mid, depth + 1, acc);
    adapt(ws, mid, b, depth + 1, acc);
}

}  // namespace

std::vector<double> integrate(const std::function<void(double, double*)>& f, int m,
                              double a, double b, const QuadOptions& opt) {
    if (m < 1) throw std::invalid_argument("integrate: bad component count");
    if (a == b) return std::vector<double>(m, 0.0);
    Workspace ws{&f, m, opt.abs_tol, std::abs(b - a), opt.max_depth, std::vector<double>(2 * m)};
    std::vector<double> acc(m, 0.0);
    adapt(ws, a, b, 0, acc);
    return acc;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
    auto wrap = [&f](double t, double* out) { out[0] = f(t); };
    return integrate(wrap, 1, a, b, opt)[0];
}

Jet integrate_jet(const std::function<Jet(double)>& f, double a, double b,
                  const QuadOptions& opt) {
    Jet probe = f(0.5 * (a + b));
    const int dim = probe.dim(), order = probe.order(), m = probe.size();
    auto wrap = [&f, dim, order, m](double t, double* out) {
        Jet j = f(t);
        if (j.dim() != dim || j.order() != order)
            throw std::invalid_argument("integrate_jet: shape varies");
        for (int i = 0; i < m; ++i) out[i] = j[i];
    };
    std::vector<double> v = integrate(wrap, m, a, b, opt);
    Jet r(dim, order);
    for (int i = 0; i < m; ++i) r[i] = v[i];
    return r;
}

}  // namespace weylcert
