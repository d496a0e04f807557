#pragma once

#include <vector>

#include "gps/matrix.hpp"

namespace gps {

/// Full eigendecomposition of a real symmetric matrix.
struct EigenSolution
{
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    Matrix vectors;
    /// max_k ||M v_k - lambda_k v_k||_2, measured after the decomposition.
    double residual_bound = 0.0;
};

/// Householder tridiagonalization followed by implicit-shift QL with
/// eigenvector accumulation.
///
/// Throws DomainError if M is asymmetric beyond 1e-14 relative, and
/// ConvergenceError if any eigenvalue needs more than 50 QL sweeps.
EigenSolution eig_symmetric(Matrix const& M);

/// Same algorithm without eigenvector accumulation; ascending eigenvalues only.
std::vector<double> eigenvalues_symmetric(Matrix const& M);

} // namespace gps
