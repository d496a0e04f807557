#pragma once

#include <climits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gps/eigensolver.hpp"
#include "gps/mapping.hpp"
#include "gps/potentials.hpp"

namespace gps {

/// Grid and acceptance parameters for a solve.
struct SolverConfig
{
    int N = 200;
    double alpha = 25.0;
    double r_max = 300.0;
    /// Eigenvalues at or above this energy are not treated as bound.
    double bound_threshold = -1e-12;
    /// Decimal places that must agree across the stability probes.
    int stability_target_digits = 11;

    /// Throws DomainError unless N >= 10, alpha > 0, r_max > 0, bound_threshold < 0.
    void validate() const;

    bool operator==(SolverConfig const&) const = default;
};

/// Principal and angular quantum numbers, n > l >= 0.
struct StateLabel
{
    int n = 1;
    int l = 0;

    bool operator==(StateLabel const&) const = default;
};

/// s p d f g h i k l m ... (j is skipped). Throws DomainError for l outside 0..9.
char spectroscopic_letter(int l);

/// "3d", "10m". Throws DomainError for invalid quantum numbers.
std::string to_string(StateLabel const& state);

/// Inverse of to_string; throws ParseError.
StateLabel parse_state_label(std::string_view text);

struct BoundState
{
    int n = 0;
    int l = 0;
    double energy = 0.0;
    /// All N+1 grid radii, including r = 0 and r = r_max.
    std::vector<double> radii;
    /// R_nl on `radii`, zero at both ends, unit norm, positive near the origin.
    std::vector<double> R;
    /// Decimal places confirmed by the stability probes (0 if not checked).
    int stable_digits = 0;
    SolverConfig config_used;
};

/// Energy of a grid-stable state without its wavefunction.
struct ConvergedEnergy
{
    double energy = 0.0;
    int stable_digits = 0;
    SolverConfig config_used;
};

/// Ascending eigenvalues of the discretized radial Hamiltonian for one grid.
std::vector<double> level_energies(PotentialSpec const& spec, int l, int N, double alpha, double r_max);

/// Single solve at `config`; the k-th eigenvalue below the bound threshold is
/// labelled n = l + 1 + k. An empty result is valid (no bound states).
std::vector<BoundState> solve_states(SolverConfig const& config, PotentialSpec const& spec, int l, int max_states);

/// R(r_j) = chi_j P_N(x_j) / sqrt(r'_j) on interior nodes, endpoints zero,
/// normalized with Gauss-Lobatto weights and sign-fixed to be positive near r = 0.
std::vector<double> reconstruct_wavefunction(EigenSolution const& solution, std::size_t k, RadialGrid const& grid);

/// Gauss-Lobatto quadrature of R^2 dr over the grid.
double norm_squared(RadialGrid const& grid, std::span<double const> R);

/// Interior sign changes, ignoring samples below 1e-6 of the peak magnitude.
int count_nodes(std::span<double const> R);

/// Stability ladder for one state. Each trial compares the energy at (N, r_max)
/// against (N + 40, r_max) and (N, 1.5 r_max); disagreement in N raises N by 100
/// (up to 600), disagreement in r_max moves to the next box in {base, 1100, 2400,
/// 4800}. Accepts at stability_target_digits decimal places; otherwise returns the
/// best trial if it reached 8 places and throws NotConvergedError if not.
ConvergedEnergy converge_energy(PotentialSpec const& spec, int n, int l, SolverConfig const& base = {});

/// converge_energy plus the wavefunction at the accepted grid.
BoundState converge_state(PotentialSpec const& spec, int n, int l, SolverConfig const& base = {});

/// Number of levels below the bound threshold whose energy moves by less than
/// 1e-6 when r_max is scaled by 1.5, capped at max_states.
int count_bound_states(PotentialSpec const& spec, int l, SolverConfig const& config = {}, int max_states = INT_MAX);

/// Fixed-point decimal string cut (not rounded) after `digits` decimal places.
std::string truncate_decimal(double value, int digits);

/// Decimal places d such that |difference| < 10^-d, clamped to [0, 16].
int agreed_decimal_places(double difference);

} // namespace gps
