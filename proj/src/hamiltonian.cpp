#include "gps/hamiltonian.hpp"

#include <string>

#include "gps/errors.hpp"

namespace gps {

Matrix second_derivative_matrix(RadialGrid const& grid)
{
    int const N = grid.order();
    std::size_t const dim = static_cast<std::size_t>(N) - 1;
    Matrix D(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        double const xi = grid.x(a + 1);
        double const ri = grid.r_prime(a + 1);
        D(a, a) = -N * (N + 1.0) / (3.0 * ri * ri * (1.0 - xi * xi));
        for (std::size_t b = a + 1; b < dim; ++b) {
            double const dx = xi - grid.x(b + 1);
            double const value = -2.0 / (ri * dx * dx * grid.r_prime(b + 1));
            D(a, b) = value;
            D(b, a) = value;
        }
    }
    return D;
}

HamiltonianMatrix::HamiltonianMatrix(std::shared_ptr<RadialGrid const> grid, Matrix const& second_derivative,
                                     PotentialSpec spec, int l)
  : grid_(std::move(grid))
  , spec_(std::move(spec))
  , l_(l)
  , entries_(second_derivative.dim())
{
    if (l < 0) {
        throw DomainError("Hamiltonian: l must be >= 0, got " + std::to_string(l));
    }
    std::size_t const dim = second_derivative.dim();
    if (dim + 2 != grid_->size()) {
        throw DomainError("Hamiltonian: second-derivative matrix does not match the grid");
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            entries_(a, b) = -0.5 * second_derivative(a, b);
        }
        entries_(a, a) += effective_potential(spec_, l_, grid_->r(a + 1));
    }
}

HamiltonianMatrix assemble(std::shared_ptr<RadialGrid const> grid, PotentialSpec const& spec, int l)
{
    Matrix const D = second_derivative_matrix(*grid);
    return HamiltonianMatrix(std::move(grid), D, spec, l);
}

} // namespace gps
