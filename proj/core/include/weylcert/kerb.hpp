#pragma once

#include <array>
#include <iosfwd>

#include <Eigen/Dense>

#include "weylcert/area_form.hpp"
#include "weylcert/surface_connection.hpp"

namespace weylcert {

// Element of the solution space of 𝓑ξ = 0, coordinatized at a base point by
// (Θ₁₂, ξ₁, ξ₂) with Θ = Dξ.  The space is 3-dimensional on a simply
// connected chart.
struct KerBElement {
    double theta = 0.0;
    std::array<double, 2> xi{0.0, 0.0};
};

// State carried along a transport path.
struct TransportState {
    double theta = 0.0;
    std::array<double, 2> xi{0.0, 0.0};
    std::array<double, 2> position{0.0, 0.0};
};

// (𝓑ξ)_{jk} = ξ_{k,j} + ξ_{j,k}, covariant derivatives of conn.
CovTensor2 b_apply(const SurfaceConnection& conn, const OneForm2& xi);

// Parallel transport of (Θ, ξ) for the connection
//   ∇_u(Θ, ξ) = (D_uΘ − ξ∧ρ(u,·), D_uξ − Θ(u,·))
// along a polyline (straight segments between consecutive vertices).  rho
// must be the Ricci tensor of conn; ∇ is then flat, so the result depends
// only on the homotopy class of the path.  Adaptive RK, tolerance 1e-11.
TransportState transport(const SurfaceConnection& conn, const CovTensor2& rho,
                         const std::vector<std::array<double, 2>>& path,
                         const TransportState& initial);

// Transports the three canonical states around the rectangle boundary and
// returns the worst endpoint deviation (relative to the state size).
double transport_loop_defect(const SurfaceConnection& conn, const CovTensor2& rho,
                             const Box& rect);

// F(y): transports (Θ, ξ) = (α_y, 0) from y to the basepoint and returns the
// base-point coordinates.  F is the immersion whose image lies on the
// classifying quadric when ρ is parallel.
KerBElement immersion_F(const SurfaceConnection& conn, const CovTensor2& rho,
                        const AreaForm& alpha, const std::vector<double>& basepoint,
                        const std::vector<double>& y);

// Certified dimension of the solution space: transports the canonical frame
// from grid.front() to every grid point, out-and-back along two homotopic
// routes.  Returns 3 when every round trip closes within tol and the frame
// stays independent; 0 when transport fails to certify, otherwise the
// numerical rank of the best-conditioned frame matrix.
int kerb_dimension(const SurfaceConnection& conn, const CovTensor2& rho,
                   const std::vector<std::vector<double>>& grid, double tol);

struct ImmersionSample {
    std::array<double, 2> y;
    KerBElement F;
};

std::vector<ImmersionSample> immersion_samples(const SurfaceConnection& conn,
                                               const CovTensor2& rho, const AreaForm& alpha,
                                               const std::vector<double>& basepoint,
                                               const std::vector<std::vector<double>>& grid);

// CSV rows y1,y2,F1,F2,F3 with full precision.
void write_immersion_csv(std::ostream& os, const std::vector<ImmersionSample>& samples);

// Least-squares linear map H with H·F(y) ≈ r(y); the residual is the RMS
// misfit.  Certifies that F reproduces the original embedding up to the
// base-frame identification.
struct EmbeddingMatch {
    Eigen::Matrix3d map;
    double residual = 0.0;
};

EmbeddingMatch embedding_match(const std::vector<ImmersionSample>& fs,
                               const std::vector<std::array<double, 3>>& rs);

// Least-squares symmetric form with ⟨F(y), F(y)⟩ = 1; the signature is
// computed with eigenvalues below zero_tol·max treated as zero.
struct QuadricFit {
    Eigen::Matrix3d form;
    double residual = 0.0;  // max |⟨F,F⟩ − 1| over the samples
    int sig_pos = 0, sig_neg = 0, sig_zero = 0;
};

QuadricFit quadric_fit(const std::vector<ImmersionSample>& fs, double zero_tol = 1e-6);

}  // namespace weylcert
