#include "weylcert/jet_linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace weylcert {

JetMatrix jet_solve(JetMatrix A, JetMatrix B, int n, int m) {
    if (static_cast<int>(A.size()) != n * n || static_cast<int>(B.size()) != n * m)
        throw std::invalid_argument("jet_solve: size mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col].value()) > std::abs(A[piv * n + col].value())) piv = r;
        if (std::abs(A[piv * n + col].value()) < 1e-14)
            throw std::runtime_error("jet_solve: singular value part");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            for (int c = 0; c < m; ++c) std::swap(B[piv * m + c], B[col * m + c]);
        }
        const Jet inv_p = recip(A[col * n + col]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Jet factor = A[r * n + col] * inv_p;
            for (int c = col; c < n; ++c) {
                Jet t = factor * A[col * n + c];
                A[r * n + c] -= t;
            }
            for (int c = 0; c < m; ++c) {
                Jet t = factor * B[col * m + c];
                B[r * m + c] -= t;
            }
        }
    }
    JetMatrix X(B.size());
    for (int r = 0; r < n; ++r) {
        const Jet inv_p = recip(A[r * n + r]);
        for (int c = 0; c < m; ++c) X[r * m + c] = B[r * m + c] * inv_p;
    }
    return X;
}

JetMatrix jet_mat_inverse(const JetMatrix& A, int n) {
    if (A.empty()) throw std::invalid_argument("jet_mat_inverse: empty");
    const int dim = A[0].dim(), ord = A[0].order();
    JetMatrix I(n * n, Jet(dim, ord));
    for (int i = 0; i < n; ++i) I[i * n + i] = Jet::constant(dim, ord, 1.0);
    return jet_solve(A, I, n, n);
}

Jet jet_det(JetMatrix A, int n) {
    if (static_cast<int>(A.size()) != n * n) throw std::invalid_argument("jet_det: size mismatch");
    const int dim = A[0].dim(), ord = A[0].order();
    double sign = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col].value()) > std::abs(A[piv * n + col].value())) piv = r;
        if (std::abs(A[piv * n + col].value()) < 1e-300) return Jet(dim, ord);
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            sign = -sign;
        }
        const Jet inv_p = recip(A[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            Jet factor = A[r * n + col] * inv_p;
            for (int c = col; c < n; ++c) {
                Jet t = factor * A[col * n + c];
                A[r * n + c] -= t;
            }
        }
    }
    Jet det = Jet::constant(dim, ord, sign);
    for (int i = 0; i < n; ++i) det = det * A[i * n + i];
    return det;
}

std::vector<Jet> jet_invert_map(const std::vector<Jet>& F, const std::vector<double>& u0) {
    const int d = static_cast<int>(F.size());
    if (static_cast<int>(u0.size()) != d)
        throw std::invalid_argument("jet_invert_map: dim mismatch");
    const int K = F[0].order();
    for (const Jet& f : F)
        if (f.dim() != d || f.order() != K)
            throw std::invalid_argument("jet_invert_map: component shape mismatch");

    Eigen::MatrixXd J(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) J(i, k) = F[i].deriv({k});
    Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
    if (!lu.isInvertible()) throw std::runtime_error("jet_invert_map: singular Jacobian");
    Eigen::MatrixXd Jinv = lu.inverse();

    std::vector<double> x0(d);
    for (int i = 0; i < d; ++i) x0[i] = F[i].value();

    // Frozen-Jacobian Newton in jet arithmetic: each sweep fixes one more
    // derivative order, so K+1 sweeps reach order K exactly.
    std::vector<Jet> x(d), G(d);
    for (int i = 0; i < d; ++i) x[i] = Jet::coordinate(d, K, i, x0[i]);
    for (int i = 0; i < d; ++i) {
        G[i] = Jet::constant(d, K, u0[i]);
        for (int k = 0; k < d; ++k) G[i].add_scaled(x[k] - x0[k], Jinv(i, k));
    }
    for (int sweep = 0; sweep < K + 1; ++sweep) {
        std::vector<Jet> E(d);
        for (int i = 0; i < d; ++i) E[i] = Jet::compose(F[i], G) - x[i];
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) G[i].add_scaled(E[k], -Jinv(i, k));
    }
    return G;
}

}  // namespace weylcert
