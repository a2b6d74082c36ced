#pragma once

#include <Eigen/Dense>

#include "weylcert/metric_chart.hpp"

namespace weylcert {

// Full curvature package of a metric chart at one point.  Conventions:
//   R_{jkl}{}^m = d_k G^m_{jl} - d_j G^m_{kl} + G^m_{ks} G^s_{jl} - G^m_{js} G^s_{kl}
//   R_{jklm} = R_{jkl}{}^s g_{sm},  rho_{jk} = R_{jsk}{}^s,  s = g^{jk} rho_{jk}
//   sigma = rho - (2n-2)^{-1} s g       (Schouten)
//   W = R - (n-2)^{-1} g ^ sigma, with
//   (a ^ b)_{jklm} = a_{jl} b_{km} - a_{jm} b_{kl} - a_{kl} b_{jm} + a_{km} b_{jl}.
// Derivative tensors carry the derivative index FIRST: dweyl(e,j,k,l,m) =
// W_{jklm;e}, dricci(e,j,k) = rho_{jk;e}.
struct CurvaturePoint {
    int n = 0;
    std::vector<double> x;
    Eigen::MatrixXd g, ginv;
    std::vector<double> gamma;   // n^3: G(a,b,c) = Gamma^a_{bc}
    std::vector<double> riem;    // n^4 covariant R_{jklm}
    Eigen::MatrixXd ricci;
    double scal = 0.0;
    Eigen::MatrixXd schouten;
    std::vector<double> weyl;    // n^4
    std::vector<double> dweyl;   // n^5
    std::vector<double> driem;   // n^5
    std::vector<double> dricci;  // n^3

    double G(int a, int b, int c) const { return gamma[(a * n + b) * n + c]; }
    double r(int j, int k, int l, int m) const { return riem[((j * n + k) * n + l) * n + m]; }
    double w(int j, int k, int l, int m) const { return weyl[((j * n + k) * n + l) * n + m]; }
    double dw(int e, int j, int k, int l, int m) const {
        return dweyl[(((e * n + j) * n + k) * n + l) * n + m];
    }
    double dr(int e, int j, int k, int l, int m) const {
        return driem[(((e * n + j) * n + k) * n + l) * n + m];
    }
    double drho(int e, int j, int k) const { return dricci[(e * n + j) * n + k]; }

    double max_weyl() const;
    double max_dweyl() const;
    double max_driem() const;

    // max violation of R_{jklm} = -R_{kjlm} = -R_{jkml} = R_{lmjk}
    double symmetry_residual() const;
    // max |R_{jklm} + R_{kljm} + R_{ljkm}|
    double bianchi_residual() const;
    // max |g^{jl} W_{jklm}| over k, m
    double weyl_trace_residual() const;
};

// Throws when the metric is singular at the point.  Needs order-3 jets of
// the components (third derivatives of g feed the derivative of W).
CurvaturePoint curvature_at(const MetricChart& m, const std::vector<double>& x);

// W as an operator on exterior 2-forms over the pair basis (a<b), weight 1.
// cov is symmetric (pair-swap symmetry of W); mixed = cov with one index
// pair raised, whose singular values decide the rank chart-independently.
struct WeylOperator {
    int n = 0;
    Eigen::MatrixXd cov;
    Eigen::MatrixXd mixed;
    Eigen::VectorXd svs;  // of mixed, descending
};

WeylOperator weyl_operator(const CurvaturePoint& cp);

struct WeylRank {
    int rank = 0;
    Eigen::VectorXd svs;
    bool ambiguous = false;    // sv2/sv1 inside [1e-9, 1e-5]
    int epsilon = 0;           // +-1 when rank == 1, else 0
    Eigen::MatrixXd omega;     // n x n antisymmetric; zero unless rank == 1
    double residual = 0.0;     // max |W - eps omega (x) omega|
    int omega_rank = 0;        // matrix rank of omega (expected 2)
    double wmax = 0.0;
};

// Rank decision on the mixed operator's singular values; when the rank is 1,
// the decomposition W = eps omega (x) omega comes from the dominant eigenpair
// of the covariant operator, with the sign of omega fixed by omega_{12} > 0
// in chart labels (first coordinate pair).
WeylRank weyl_rank(const MetricChart& m, const std::vector<double>& x, double rel_tol = 1e-7);
WeylRank weyl_rank(const CurvaturePoint& cp, double rel_tol = 1e-7);

struct DistributionP {
    Eigen::MatrixXd basis;           // n x 2, Euclidean-orthonormal columns
    double null_residual = 0.0;      // max |g(b_i, b_j)|
    double rzo_residual = 0.0;       // R(P,P^perp,.,.), R(P,P,.,.), R(P^perp,P^perp,P,.)
    double rvv_residual = 0.0;       // R(P,.,P^perp,.), R(P^perp,P^perp,.,.)
    double parallel_residual = 0.0;  // covariant derivatives of the spanning
                                     // fields, distance from span(basis)
};

// The distribution spanned by W(u,v)v', i.e. the image of omega with one
// index raised.  Throws unless that image is two-dimensional.
DistributionP distribution_P(const MetricChart& m, const std::vector<double>& x,
                             const Eigen::MatrixXd& omega);
DistributionP distribution_P(const CurvaturePoint& cp, const Eigen::MatrixXd& omega);

}  // namespace weylcert
