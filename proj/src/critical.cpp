#include "gps/critical.hpp"

#include <optional>
#include <string>

#include "gps/errors.hpp"

namespace gps {

namespace {

constexpr double binding_energy_floor = -1e-10;
constexpr double upper_screening = 2.0;
constexpr double fallback_r_max = 4800.0;
constexpr int fallback_N = 600;
constexpr int fallback_N_check = 560;
constexpr int probe_digits = 8;

} // namespace

BindingProbe probe_binding(PotentialSpec const& spec, int n, int l, SolverConfig const& base)
{
    SolverConfig config = base;
    config.stability_target_digits = probe_digits;
    try {
        auto const e = converge_energy(spec, n, l, config);
        return {e.energy < binding_energy_floor, e.energy};
    } catch (NotConvergedError const&) {
    }

    auto const k = static_cast<std::size_t>(n - l - 1);
    auto const fine = level_energies(spec, l, fallback_N, base.alpha, fallback_r_max);
    auto const coarse = level_energies(spec, l, fallback_N_check, base.alpha, fallback_r_max);
    if (k >= fine.size() || k >= coarse.size()) {
        return {false, 0.0};
    }
    bool const bound = fine[k] < binding_energy_floor && coarse[k] < binding_energy_floor;
    return {bound, fine[k]};
}

CriticalResult find_critical_screening(PotentialSpec const& family, int n, int l, double tol,
                                       SolverConfig const& base)
{
    if (std::holds_alternative<Gesc>(family)) {
        throw UnsupportedError("critical screening is not defined for gesc: its b -> infinity limit -a/r still binds");
    }
    if (std::holds_alternative<Coulomb>(family)) {
        throw UnsupportedError("critical screening needs a screened family (ecsc or yukawa)");
    }
    if (!(tol >= 1e-5)) {
        throw DomainError("find_critical_screening: tol must be >= 1e-5");
    }
    if (l < 0 || n <= l) {
        throw DomainError("find_critical_screening: need n > l >= 0");
    }
    base.validate();

    if (probe_binding(with_screening(family, upper_screening), n, l, base).bound) {
        throw NotConvergedError("no upper bracket: state still bound at screening " + std::to_string(upper_screening));
    }

    double lo = 0.0;
    double hi = upper_screening;
    std::optional<double> energy_at_lo;
    while (hi - lo > tol) {
        double const mid = 0.5 * (lo + hi);
        auto const probe = probe_binding(with_screening(family, mid), n, l, base);
        if (probe.bound) {
            lo = mid;
            energy_at_lo = probe.energy;
        } else {
            hi = mid;
        }
    }
    if (!energy_at_lo) {
        energy_at_lo = probe_binding(with_screening(family, lo), n, l, base).energy;
    }

    CriticalResult result;
    result.state = {n, l};
    result.delta_c = 0.5 * (lo + hi);
    result.bracket_width = hi - lo;
    result.energy_at_lower = *energy_at_lo;
    return result;
}

} // namespace gps
