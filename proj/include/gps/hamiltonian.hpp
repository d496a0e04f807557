#pragma once

#include <memory>

#include "gps/mapping.hpp"
#include "gps/matrix.hpp"
#include "gps/potentials.hpp"

namespace gps {

/// Symmetrized second-derivative matrix on the interior nodes 1..N-1:
///   D_ij = -2 / [r'_i (x_i - x_j)^2 r'_j]       (i != j)
///   D_ii = -N(N+1) / [3 r'_i^2 (1 - x_i^2)]
/// Matrix index a corresponds to grid node a + 1.
Matrix second_derivative_matrix(RadialGrid const& grid);

/// H = -D/2 + diag(u), u_i = l(l+1)/(2 r_i^2) + v(r_i), on interior nodes.
class HamiltonianMatrix
{
  public:
    HamiltonianMatrix(std::shared_ptr<RadialGrid const> grid, Matrix const& second_derivative,
                      PotentialSpec spec, int l);

    std::size_t dim() const { return entries_.dim(); }
    Matrix const& entries() const { return entries_; }
    RadialGrid const& grid() const { return *grid_; }
    PotentialSpec const& spec() const { return spec_; }
    int l() const { return l_; }

  private:
    std::shared_ptr<RadialGrid const> grid_;
    PotentialSpec spec_;
    int l_;
    Matrix entries_;
};

/// Builds D internally; prefer the constructor with a shared D in sweeps.
HamiltonianMatrix assemble(std::shared_ptr<RadialGrid const> grid, PotentialSpec const& spec, int l);

} // namespace gps
