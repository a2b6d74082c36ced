#include "weylcert/kerb.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace weylcert {

namespace {

namespace odeint = boost::numeric::odeint;

using State3 = std::array<double, 3>;  // (theta, xi1, xi2)

// directional derivative of the state at y along v:
//   d theta = (Γ¹_{j1} + Γ²_{j2}) v^j theta + (ξ₁ρ_{j2} − ξ₂ρ_{j1}) v^j
//   d ξ_k   = Γ^s_{jk} v^j ξ_s + Θ_{jk} v^j,   Θ₁₂ = −Θ₂₁ = theta
class TransportRhs {
public:
    TransportRhs(const SurfaceConnection& conn, const CovTensor2& rho, std::array<double, 2> p,
                 std::array<double, 2> q)
        : conn_(conn), rho_(rho), p_(p), q_(q) {}

    void operator()(const State3& s, State3& ds, double t) const {
        const double y[2] = {p_[0] + t * (q_[0] - p_[0]), p_[1] + t * (q_[1] - p_[1])};
        const double v[2] = {q_[0] - p_[0], q_[1] - p_[1]};
        const JetTensor G = christoffel_jets(conn_, y, 0);
        const JetTensor R = tensor_jets(rho_, y, 0);
        const double theta = s[0], xi[2] = {s[1], s[2]};

        double dtheta = 0.0, dxi[2] = {0.0, 0.0};
        for (int j = 0; j < 2; ++j) {
            dtheta += v[j] * ((G(0, j, 0).value() + G(1, j, 1).value()) * theta +
                              xi[0] * R(j, 1).value() - xi[1] * R(j, 0).value());
            for (int k = 0; k < 2; ++k) {
                double acc = 0.0;
                for (int m = 0; m < 2; ++m) acc += G(m, j, k).value() * xi[m];
                const double big_theta = (j == k) ? 0.0 : (j == 0 ? theta : -theta);
                dxi[k] += v[j] * (acc + big_theta);
            }
        }
        ds[0] = dtheta;
        ds[1] = dxi[0];
        ds[2] = dxi[1];
    }

private:
    const SurfaceConnection& conn_;
    const CovTensor2& rho_;
    std::array<double, 2> p_, q_;
};

State3 integrate_segment(const SurfaceConnection& conn, const CovTensor2& rho,
                         std::array<double, 2> p, std::array<double, 2> q, State3 s) {
    if (p == q) return s;
    auto stepper = odeint::make_controlled(1e-11, 1e-11, odeint::runge_kutta_dopri5<State3>());
    odeint::integrate_adaptive(stepper, TransportRhs(conn, rho, p, q), s, 0.0, 1.0, 0.05);
    return s;
}

State3 run_path(const SurfaceConnection& conn, const CovTensor2& rho,
                const std::vector<std::array<double, 2>>& path, State3 s) {
    for (size_t i = 0; i + 1 < path.size(); ++i)
        s = integrate_segment(conn, rho, path[i], path[i + 1], s);
    return s;
}

double state_dist(const State3& a, const State3& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

CovTensor2 b_apply(const SurfaceConnection& conn, const OneForm2& xi) {
    auto cov = [&conn, &xi](int j, int k) {
        ScalarField d = derivative(xi.comp[k], j);
        for (int s = 0; s < 2; ++s) d = d - conn.gamma[s][j][k] * xi.comp[s];
        return d;
    };
    CovTensor2 out;
    out.sym = Sym2::kSymmetric;
    for (int j = 0; j < 2; ++j)
        for (int k = j; k < 2; ++k) {
            ScalarField f = cov(j, k) + cov(k, j);
            out.comp[j][k] = out.comp[k][j] = f;
        }
    return out;
}

TransportState transport(const SurfaceConnection& conn, const CovTensor2& rho,
                         const std::vector<std::array<double, 2>>& path,
                         const TransportState& initial) {
    if (path.size() < 2) throw std::invalid_argument("transport: need at least two vertices");
    if (std::abs(path.front()[0] - initial.position[0]) > 1e-12 ||
        std::abs(path.front()[1] - initial.position[1]) > 1e-12)
        throw std::invalid_argument("transport: path does not start at the initial position");

    State3 s{initial.theta, initial.xi[0], initial.xi[1]};
    s = run_path(conn, rho, path, s);
    TransportState out;
    out.theta = s[0];
    out.xi = {s[1], s[2]};
    out.position = path.back();
    return out;
}

double transport_loop_defect(const SurfaceConnection& conn, const CovTensor2& rho,
                             const Box& rect) {
    if (rect.dim() != 2) throw std::invalid_argument("transport_loop_defect: need a 2-box");
    const std::array<double, 2> c00{rect.lo[0], rect.lo[1]}, c10{rect.hi[0], rect.lo[1]},
        c11{rect.hi[0], rect.hi[1]}, c01{rect.lo[0], rect.hi[1]};
    const std::vector<std::array<double, 2>> loop{c00, c10, c11, c01, c00};

    double worst = 0.0;
    const State3 frame[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const State3& s0 : frame) {
        const State3 s1 = run_path(conn, rho, loop, s0);
        worst = std::max(worst, state_dist(s0, s1));
    }
    return worst;
}

KerBElement immersion_F(const SurfaceConnection& conn, const CovTensor2& rho,
                        const AreaForm& alpha, const std::vector<double>& basepoint,
                        const std::vector<double>& y) {
    State3 s{alpha.a(y, 0).value(), 0.0, 0.0};
    const std::array<double, 2> from{y[0], y[1]}, to{basepoint[0], basepoint[1]};
    s = integrate_segment(conn, rho, from, to, s);
    KerBElement out;
    out.theta = s[0];
    out.xi = {s[1], s[2]};
    return out;
}

int kerb_dimension(const SurfaceConnection& conn, const CovTensor2& rho,
                   const std::vector<std::vector<double>>& grid, double tol) {
    if (grid.empty()) return 0;
    const std::array<double, 2> base{grid.front()[0], grid.front()[1]};
    const State3 frame[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    double best_min_sv = -1.0;
    Eigen::Vector3d best_svs = Eigen::Vector3d::Zero();
    for (const auto& yv : grid) {
        const std::array<double, 2> y{yv[0], yv[1]};
        // straight segment out, L-shaped route back: homotopic, so the
        // round trip must close if the inputs are consistent
        const std::array<double, 2> corner{base[0], y[1]};
        Eigen::Matrix3d M;
        for (int i = 0; i < 3; ++i) {
            const State3 at_y = integrate_segment(conn, rho, base, y, frame[i]);
            State3 back = integrate_segment(conn, rho, y, corner, at_y);
            back = integrate_segment(conn, rho, corner, base, back);
            if (state_dist(back, frame[i]) > tol) return 0;
            for (int r = 0; r < 3; ++r) M(r, i) = at_y[r];
        }
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(M);
        if (svd.singularValues()(2) > best_min_sv) {
            best_min_sv = svd.singularValues()(2);
            best_svs = svd.singularValues();
        }
    }
    int rank = 0;
    for (int i = 0; i < 3; ++i)
        if (best_svs(i) > 1e-8 * std::max(best_svs(0), 1e-30)) ++rank;
    return rank;
}

std::vector<ImmersionSample> immersion_samples(const SurfaceConnection& conn,
                                               const CovTensor2& rho, const AreaForm& alpha,
                                               const std::vector<double>& basepoint,
                                               const std::vector<std::vector<double>>& grid) {
    std::vector<ImmersionSample> out;
    out.reserve(grid.size());
    for (const auto& y : grid) {
        ImmersionSample s;
        s.y = {y[0], y[1]};
        s.F = immersion_F(conn, rho, alpha, basepoint, y);
        out.push_back(s);
    }
    return out;
}

void write_immersion_csv(std::ostream& os, const std::vector<ImmersionSample>& samples) {
    os << "y1,y2,F1,F2,F3\n";
    char line[256];
    for (const auto& s : samples) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.y[0], s.y[1],
                      s.F.theta, s.F.xi[0], s.F.xi[1]);
        os << line;
    }
}

EmbeddingMatch embedding_match(const std::vector<ImmersionSample>& fs,
                               const std::vector<std::array<double, 3>>& rs) {
    if (fs.size() != rs.size() || fs.size() < 3)
        throw std::invalid_argument("embedding_match: need matching sample lists");
    const int n = static_cast<int>(fs.size());
    Eigen::Matrix3Xd F(3, n), R(3, n);
    for (int i = 0; i < n; ++i) {
        F.col(i) << fs[i].F.theta, fs[i].F.xi[0], fs[i].F.xi[1];
        R.col(i) << rs[i][0], rs[i][1], rs[i][2];
    }
    const Eigen::Matrix3d FFt = F * F.transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(FFt, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(2) < 1e-12 * svd.singularValues()(0))
        throw std::runtime_error("embedding_match: rank-deficient sample set");

    EmbeddingMatch out;
    out.map = (R * F.transpose()) * FFt.inverse();
    out.residual = std::sqrt((out.map * F - R).squaredNorm() / n);
    return out;
}

QuadricFit quadric_fit(const std::vector<ImmersionSample>& fs, double zero_tol) {
    const int n = static_cast<int>(fs.size());
    if (n < 6) throw std::invalid_argument("quadric_fit: need at least six samples");
    Eigen::MatrixXd A(n, 6);
    for (int i = 0; i < n; ++i) {
        const double x = fs[i].F.theta, y = fs[i].F.xi[0], z = fs[i].F.xi[1];
        A.row(i) << x * x, 2 * x * y, 2 * x * z, y * y, 2 * y * z, z * z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues()(5) < 1e-10 * svd.singularValues()(0))
        throw std::runtime_error("quadric_fit: sample geometry does not determine the form");
    const Eigen::VectorXd s = svd.solve(Eigen::VectorXd::Ones(n));

    QuadricFit out;
    out.form << s(0), s(1), s(2), s(1), s(3), s(4), s(2), s(4), s(5);
    out.residual = (A * s - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(out.form);
    const double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i) {
        const double ev = eig.eigenvalues()(i);
        if (std::abs(ev) < zero_tol * std::max(scale, 1e-30))
            ++out.sig_zero;
        else if (ev > 0)
            ++out.sig_pos;
        else
            ++out.sig_neg;
    }
    return out;
}

}  // namespace weylcert
