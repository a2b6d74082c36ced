#pragma once

#include <string>
#include <vector>

#include "weylcert/surface_connection.hpp"

namespace weylcert {

struct FlatnessResult {
    bool projectively_flat;
    double codazzi_residual;   // max |ρ_{jl,k} − ρ_{kl,j}| over the grid
    double asymmetry;          // max |ρ_{12} − ρ_{21}|
};

// Codazzi test for the Ricci tensor of conn.  An asymmetric ρ (beyond tol)
// means the connection is not even locally equiaffine; with strict = true
// that throws, otherwise it is reported through the result fields.
FlatnessResult is_projectively_flat(const SurfaceConnection& conn,
                                    const std::vector<std::vector<double>>& grid, double tol,
                                    bool strict = false);

// Γ̃^l_{jk} = Γ^l_{jk} + ξ_j δ^l_k + ξ_k δ^l_j (same reparametrized geodesics).
SurfaceConnection projective_modify(const SurfaceConnection& conn, const OneForm2& xi);

enum class ConnClass { kFlat, kParallelRicci, kRicciRecurrent, kGeneric };

const char* to_string(ConnClass c);

struct ClassifyResult {
    ConnClass verdict = ConnClass::kGeneric;
    int sig_pos = 0, sig_neg = 0, sig_zero = 0;  // ρ signature (parallel-Ricci case)
    double max_rho = 0.0;
    double max_drho = 0.0;
    double max_minor = 0.0;
    std::vector<std::string> notes;  // per-point breakdown when verdicts mix
};

// FLAT / PARALLEL_RICCI / RICCI_RECURRENT / GENERIC via ρ, Dρ and the 2x2
// dependence minors (no division by ρ: it may be degenerate).
ClassifyResult classify_connection(const SurfaceConnection& conn,
                                   const std::vector<std::vector<double>>& grid, double tol);

}  // namespace weylcert
