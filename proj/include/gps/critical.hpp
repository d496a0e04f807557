#pragma once

#include "gps/potentials.hpp"
#include "gps/spectrum.hpp"

namespace gps {

struct CriticalResult
{
    StateLabel state;
    /// Midpoint of the final bisection bracket.
    double delta_c = 0.0;
    /// Width of the final bracket; the state is bound below it and unbound above.
    double bracket_width = 0.0;
    /// Energy at the bound end of the bracket (a.u.).
    double energy_at_lower = 0.0;
};

/// Result of probing one screening value.
struct BindingProbe
{
    bool bound = false;
    double energy = 0.0;
};

/// Decide whether state (n, l) is bound at the given screening. A state counts
/// as bound when the stability ladder accepts it with E < -1e-10; when the
/// ladder cannot stabilize it, the largest box (r_max = 4800, N = 560 and 600)
/// decides, since a Dirichlet box only raises energies.
BindingProbe probe_binding(PotentialSpec const& spec, int n, int l, SolverConfig const& base = {});

/// Bisection on the screening parameter of `family` (ECSC or Yukawa; its own
/// screening value is ignored) over [0, 2] until the bracket is <= tol.
///
/// Throws DomainError for tol < 1e-5 or n <= l, UnsupportedError for GESC and
/// Coulomb, and NotConvergedError("no upper bracket") if the state is still
/// bound at screening 2.
CriticalResult find_critical_screening(PotentialSpec const& family, int n, int l, double tol,
                                       SolverConfig const& base = {});

} // namespace gps
