#pragma once

#include <vector>

#include "weylcert/jet.hpp"

namespace weylcert {

// Row-major n x n matrix of jets sharing one shape.
using JetMatrix = std::vector<Jet>;

// Solves A X = B for m right-hand-side columns (B row-major n x m) by
// Gaussian elimination with partial pivoting on the value parts.
JetMatrix jet_solve(JetMatrix A, JetMatrix B, int n, int m);

JetMatrix jet_mat_inverse(const JetMatrix& A, int n);

Jet jet_det(JetMatrix A, int n);

// Jets of the inverse of the chart map F: R^d -> R^d around u0.  F holds the
// d component jets of F at u0 (so F[i].value() = F(u0)_i); the result holds
// jets of F^{-1} at F(u0), with values u0.  Requires dF(u0) invertible.
std::vector<Jet> jet_invert_map(const std::vector<Jet>& F, const std::vector<double>& u0);

}  // namespace weylcert
