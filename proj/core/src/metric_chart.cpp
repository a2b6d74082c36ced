#include "weylcert/metric_chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylcert {

namespace {

Jet lift_jet(const Jet& b, int n, int order) {
    Jet out(n, order);
    const JetShape& sh = out.shape();
    const JetShape& shb = b.shape();
    const int d = b.dim();
    for (int i = 0; i < sh.size(); ++i) {
        const MIdx& a = sh.index(i);
        bool inside = true;
        for (int ax = d; ax < kMaxJetDim && inside; ++ax) inside = (a[ax] == 0);
        if (inside) out[i] = b[shb.rank(a)];
    }
    return out;
}

}  // namespace

int MetricChart::max_order() const {
    int m = kMaxJetOrder;
    for (const auto& c : comp) m = std::min(m, c.max_order());
    return m;
}

ScalarField lift_to_chart(const ScalarField& base, int n) {
    if (!base.valid()) throw std::invalid_argument("lift_to_chart: empty field");
    const int d = base.dim();
    if (d > n) throw std::invalid_argument("lift_to_chart: base dim exceeds chart dim");
    if (d == n) return base;
    return ScalarField(n, base.max_order(), [base, n](const double* x, int order) {
        return lift_jet(base(x, order), n, order);
    });
}

JetTensor metric_jets(const MetricChart& m, const double* x, int order) {
    JetTensor out(m.n, 2, m.n, order);
    for (int a = 0; a < m.n; ++a)
        for (int b = a; b < m.n; ++b) {
            out(a, b) = m.g(a, b)(x, order);
            if (b != a) out(b, a) = out(a, b);
        }
    return out;
}

Eigen::MatrixXd metric_values(const MetricChart& m, const std::vector<double>& x) {
    Eigen::MatrixXd out(m.n, m.n);
    for (int a = 0; a < m.n; ++a)
        for (int b = a; b < m.n; ++b) {
            const double v = m.g(a, b)(x.data(), 0).value();
            out(a, b) = v;
            out(b, a) = v;
        }
    return out;
}

SignatureCheck check_signature(const MetricChart& m,
                               const std::vector<std::vector<double>>& grid) {
    if (static_cast<int>(m.signature.size()) != m.n)
        throw std::invalid_argument("check_signature: declared signature has wrong length");
    std::vector<int> want = m.signature;
    std::sort(want.begin(), want.end());

    SignatureCheck out;
    out.matches = !grid.empty();
    out.margin = grid.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    for (const auto& x : grid) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric_values(m, x),
                                                          Eigen::EigenvaluesOnly);
        const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
        for (int i = 0; i < m.n; ++i) {
            out.margin = std::min(out.margin, std::abs(ev(i)));
            const int sign = ev(i) > 0.0 ? 1 : (ev(i) < 0.0 ? -1 : 0);
            if (sign != want[i]) out.matches = false;
        }
    }
    return out;
}

InnerProductV::InnerProductV(Eigen::MatrixXd m) : gamma(std::move(m)) {
    if (gamma.rows() != gamma.cols()) throw std::invalid_argument("InnerProductV: not square");
    if (gamma.rows() > 0 && (gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("InnerProductV: not symmetric");
}

InnerProductV InnerProductV::diag(const std::vector<double>& d) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d.size(), d.size());
    for (int i = 0; i < static_cast<int>(d.size()); ++i) m(i, i) = d[i];
    return InnerProductV(std::move(m));
}

double InnerProductV::theta(const double* v) const {
    const int k = size();
    double s = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) s += gamma(a, b) * v[a] * v[b];
    return s;
}

std::vector<int> InnerProductV::signs() const {
    const int k = size();
    if (k == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gamma, Eigen::EigenvaluesOnly);
    const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) <= 1e-12 * std::max(scale, 1.0))
            throw std::invalid_argument("InnerProductV: degenerate inner product");
        out[i] = ev > 0.0 ? 1 : -1;
    }
    return out;
}

}  // namespace weylcert
