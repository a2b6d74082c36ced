#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "weylcert/curvature.hpp"

namespace weylcert {

WeylOperator weyl_operator(const CurvaturePoint& cp) {
    const int n = cp.n;
    const int N = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(N);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    WeylOperator op;
    op.n = n;
    op.cov = Eigen::MatrixXd(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            op.cov(i, j) = cp.w(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second);

    // raise one index pair: W_{ab}{}^{cd} = sum_{s<t} W_{abst} (g^{sc}g^{td} - g^{sd}g^{tc})
    Eigen::MatrixXd raise(N, N);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) {
            const int s = pairs[i].first, t = pairs[i].second;
            const int c = pairs[j].first, d = pairs[j].second;
            raise(i, j) = cp.ginv(s, c) * cp.ginv(t, d) - cp.ginv(s, d) * cp.ginv(t, c);
        }
    op.mixed = op.cov * raise;
    op.svs = Eigen::JacobiSVD<Eigen::MatrixXd>(op.mixed).singularValues();
    return op;
}

WeylRank weyl_rank(const CurvaturePoint& cp, double rel_tol) {
    const WeylOperator op = weyl_operator(cp);
    const int n = cp.n;
    const int N = n * (n - 1) / 2;

    WeylRank out;
    out.svs = op.svs;
    out.wmax = cp.max_weyl();
    out.omega = Eigen::MatrixXd::Zero(n, n);

    const double sv1 = op.svs(0);
    if (sv1 <= 1e-13 * std::max(1.0, std::abs(cp.g.cwiseAbs().maxCoeff()))) {
        out.rank = 0;
        return out;
    }
    for (int i = 0; i < N; ++i)
        if (op.svs(i) > rel_tol * sv1) out.rank = i + 1;
    if (N >= 2) {
        const double gap = op.svs(1) / sv1;
        out.ambiguous = (gap >= 1e-9 && gap <= 1e-5);
    }
    if (out.rank != 1) return out;

    // dominant eigenpair of the symmetric covariant operator
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.cov);
    int best = 0;
    for (int i = 1; i < N; ++i)
        if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(best))) best = i;
    const double lam = es.eigenvalues()(best);
    out.epsilon = lam > 0.0 ? 1 : -1;
    Eigen::VectorXd v = std::sqrt(std::abs(lam)) * es.eigenvectors().col(best);

    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx) {
            out.omega(a, b) = v(idx);
            out.omega(b, a) = -v(idx);
        }
    // fix the sign: positive pairing with the first coordinate 2-form
    double lead = out.omega(0, 1);
    if (lead == 0.0)
        for (int i = 0; i < N && lead == 0.0; ++i) lead = v(i);
    if (lead < 0.0) out.omega = -out.omega;

    double res = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int mm = 0; mm < n; ++mm)
                    res = std::max(res, std::abs(cp.w(j, k, l, mm) -
                                                 out.epsilon * out.omega(j, k) *
                                                     out.omega(l, mm)));
    out.residual = res;

    const Eigen::VectorXd osv = Eigen::JacobiSVD<Eigen::MatrixXd>(out.omega).singularValues();
    out.omega_rank = 0;
    for (int i = 0; i < n; ++i)
        if (osv(i) > rel_tol * osv(0)) ++out.omega_rank;
    return out;
}

WeylRank weyl_rank(const MetricChart& m, const std::vector<double>& x, double rel_tol) {
    return weyl_rank(curvature_at(m, x), rel_tol);
}

namespace {

// riem contracted with a direction on one slot; out has the remaining rank.
std::vector<double> contract_slot(const std::vector<double>& t, int rank, int slot, int n,
                                  const Eigen::VectorXd& v) {
    int outer = 1;
    for (int i = 0; i < slot; ++i) outer *= n;
    int inner = 1;
    for (int i = slot + 1; i < rank; ++i) inner *= n;
    std::vector<double> out(static_cast<std::size_t>(outer) * inner, 0.0);
    for (int o = 0; o < outer; ++o)
        for (int s = 0; s < n; ++s) {
            const double vs = v(s);
            if (vs == 0.0) continue;
            const double* src = t.data() + (static_cast<std::size_t>(o) * n + s) * inner;
            double* dst = out.data() + static_cast<std::size_t>(o) * inner;
            for (int i = 0; i < inner; ++i) dst[i] += vs * src[i];
        }
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double d : v) m = std::max(m, std::abs(d));
    return m;
}

}  // namespace

DistributionP distribution_P(const CurvaturePoint& cp, const Eigen::MatrixXd& omega) {
    const int n = cp.n;
    if (omega.rows() != n || omega.cols() != n)
        throw std::invalid_argument("distribution_P: omega has wrong shape");

    // image of the index-raised omega
    const Eigen::MatrixXd mixed = cp.ginv * omega;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mixed, Eigen::ComputeFullU);
    const Eigen::VectorXd sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (sv(i) > 1e-9 * std::max(sv(0), 1e-300)) ++rank;
    if (rank != 2) throw std::runtime_error("distribution_P: image of omega is not a plane");

    DistributionP out;
    out.basis = svd.matrixU().leftCols(2);

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.null_residual = std::max(
                out.null_residual, std::abs(out.basis.col(i).dot(cp.g * out.basis.col(j))));

    // P^perp: kernel of basis^T g (an (n-2)-dim space containing P)
    const Eigen::MatrixXd bg = out.basis.transpose() * cp.g;  // 2 x n
    Eigen::JacobiSVD<Eigen::MatrixXd> ksvd(bg, Eigen::ComputeFullV);
    const Eigen::MatrixXd perp = ksvd.matrixV().rightCols(n - 2);

    // one partial contraction per curvature slot needed by the two families
    double rzo = 0.0, rvv = 0.0;
    for (int ip = 0; ip < 2; ++ip) {
        const auto r1p = contract_slot(cp.riem, 4, 0, n, out.basis.col(ip));
        for (int iq = 0; iq < n - 2; ++iq)
            rzo = std::max(rzo, max_abs(contract_slot(r1p, 3, 0, n, perp.col(iq))));
        for (int iq = 0; iq < 2; ++iq)
            rzo = std::max(rzo, max_abs(contract_slot(r1p, 3, 0, n, out.basis.col(iq))));
        for (int iq = 0; iq < n - 2; ++iq)
            rvv = std::max(rvv, max_abs(contract_slot(r1p, 3, 1, n, perp.col(iq))));
    }
    for (int ip = 0; ip < n - 2; ++ip) {
        const auto r1q = contract_slot(cp.riem, 4, 0, n, perp.col(ip));
        for (int iq = 0; iq < n - 2; ++iq) {
            const auto r2q = contract_slot(r1q, 3, 0, n, perp.col(iq));
            rvv = std::max(rvv, max_abs(r2q));
            for (int a = 0; a < 2; ++a)
                rzo = std::max(rzo, max_abs(contract_slot(r2q, 2, 0, n, out.basis.col(a))));
        }
    }
    out.rzo_residual = rzo;
    out.rvv_residual = rvv;

    // covariant derivative of the constant extension of each spanning field,
    // measured against span(basis) in the Euclidean sense
    const Eigen::MatrixXd proj =
        Eigen::MatrixXd::Identity(n, n) - out.basis * out.basis.transpose();
    for (int i = 0; i < 2; ++i)
        for (int c = 0; c < n; ++c) {
            Eigen::VectorXd wv(n);
            for (int a = 0; a < n; ++a) {
                double s = 0.0;
                for (int b = 0; b < n; ++b) s += cp.G(a, c, b) * out.basis(b, i);
                wv(a) = s;
            }
            out.parallel_residual = std::max(out.parallel_residual, (proj * wv).norm());
        }
    return out;
}

DistributionP distribution_P(const MetricChart& m, const std::vector<double>& x,
                             const Eigen::MatrixXd& omega) {
    return distribution_P(curvature_at(m, x), omega);
}

}  // namespace weylcert
