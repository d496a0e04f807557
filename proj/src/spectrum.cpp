#include "gps/spectrum.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "gps/errors.hpp"
#include "gps/hamiltonian.hpp"

namespace gps {

namespace {

constexpr std::string_view letters = "spdfghiklm";

constexpr int n_probe_offset = 40;
constexpr int n_escalation_step = 100;
constexpr int n_escalation_cap = 600;
constexpr double r_max_probe_factor = 1.5;
constexpr std::array<double, 3> r_max_ladder = {1100.0, 2400.0, 4800.0};
constexpr int minimum_reportable_digits = 8;
constexpr double continuum_shift_limit = 1e-6;

void check_state(int n, int l)
{
    if (l < 0 || n <= l) {
        throw DomainError("invalid state n=" + std::to_string(n) + ", l=" + std::to_string(l) + " (need n > l >= 0)");
    }
}

// Energies of one l-channel memoized by (N, r_max) for the duration of a ladder.
class LevelCache
{
  public:
    LevelCache(PotentialSpec spec, int l, double alpha)
      : spec_(std::move(spec))
      , l_(l)
      , alpha_(alpha)
    {}

    std::vector<double> const& levels(int N, double r_max)
    {
        auto key = std::make_pair(N, r_max);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, level_energies(spec_, l_, N, alpha_, r_max)).first;
        }
        return it->second;
    }

    /// Energy of the k-th level if it lies below `threshold`.
    std::optional<double> bound_level(std::size_t k, int N, double r_max, double threshold)
    {
        auto const& e = levels(N, r_max);
        if (k < e.size() && e[k] < threshold) {
            return e[k];
        }
        return std::nullopt;
    }

  private:
    PotentialSpec spec_;
    int l_;
    double alpha_;
    std::map<std::pair<int, double>, std::vector<double>> cache_;
};

} // namespace

void SolverConfig::validate() const
{
    if (N < 10) {
        throw DomainError("SolverConfig: N must be >= 10");
    }
    if (!(alpha > 0.0) || !(r_max > 0.0)) {
        throw DomainError("SolverConfig: alpha and r_max must be positive");
    }
    if (!(bound_threshold < 0.0)) {
        throw DomainError("SolverConfig: bound_threshold must be negative");
    }
    if (stability_target_digits < 1 || stability_target_digits > 16) {
        throw DomainError("SolverConfig: stability_target_digits must be in 1..16");
    }
}

char spectroscopic_letter(int l)
{
    if (l < 0 || l >= static_cast<int>(letters.size())) {
        throw DomainError("no spectroscopic letter for l=" + std::to_string(l));
    }
    return letters[static_cast<std::size_t>(l)];
}

std::string to_string(StateLabel const& state)
{
    check_state(state.n, state.l);
    return std::to_string(state.n) + spectroscopic_letter(state.l);
}

StateLabel parse_state_label(std::string_view text)
{
    if (text.size() < 2) {
        throw ParseError("malformed state label '" + std::string(text) + "'");
    }
    auto const letter_pos = letters.find(text.back());
    int n = 0;
    auto const digits = text.substr(0, text.size() - 1);
    auto const [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (letter_pos == std::string_view::npos || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed state label '" + std::string(text) + "'");
    }
    int const l = static_cast<int>(letter_pos);
    if (n <= l) {
        throw ParseError("state label '" + std::string(text) + "' has n <= l");
    }
    return {n, l};
}

std::vector<double> level_energies(PotentialSpec const& spec, int l, int N, double alpha, double r_max)
{
    auto grid = std::make_shared<RadialGrid const>(build_grid(N, alpha, r_max));
    return eigenvalues_symmetric(assemble(grid, spec, l).entries());
}

double norm_squared(RadialGrid const& grid, std::span<double const> R)
{
    auto const& lobatto = grid.lobatto();
    double sum = 0.0;
    for (std::size_t j = 0; j < R.size(); ++j) {
        sum += lobatto.weight(j) * grid.r_prime(j) * R[j] * R[j];
    }
    return sum;
}

std::vector<double> reconstruct_wavefunction(EigenSolution const& solution, std::size_t k, RadialGrid const& grid)
{
    std::size_t const dim = solution.vectors.dim();
    if (k >= dim || dim + 2 != grid.size()) {
        throw DomainError("reconstruct_wavefunction: eigenvector index or grid size mismatch");
    }
    std::vector<double> R(grid.size(), 0.0);
    double peak = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        std::size_t const j = a + 1;
        R[j] = solution.vectors(a, k) * grid.lobatto().legendre_at(j) / std::sqrt(grid.r_prime(j));
        peak = std::max(peak, std::abs(R[j]));
    }
    double const scale = 1.0 / std::sqrt(norm_squared(grid, R));
    auto const first = std::find_if(R.begin(), R.end(), [peak](double v) { return std::abs(v) > 1e-6 * peak; });
    double const sign = (first != R.end() && *first < 0.0) ? -1.0 : 1.0;
    for (double& v : R) {
        v *= sign * scale;
    }
    return R;
}

int count_nodes(std::span<double const> R)
{
    double peak = 0.0;
    for (double v : R) {
        peak = std::max(peak, std::abs(v));
    }
    int nodes = 0;
    int previous_sign = 0;
    for (double v : R) {
        if (std::abs(v) <= 1e-6 * peak) {
            continue;
        }
        int const sign = v > 0.0 ? 1 : -1;
        if (previous_sign != 0 && sign != previous_sign) {
            ++nodes;
        }
        previous_sign = sign;
    }
    return nodes;
}

std::vector<BoundState> solve_states(SolverConfig const& config, PotentialSpec const& spec, int l, int max_states)
{
    config.validate();
    if (l < 0 || max_states < 1) {
        throw DomainError("solve_states: need l >= 0 and max_states >= 1");
    }
    auto grid = std::make_shared<RadialGrid const>(build_grid(config.N, config.alpha, config.r_max));
    auto const solution = eig_symmetric(assemble(grid, spec, l).entries());

    std::vector<BoundState> states;
    for (std::size_t k = 0; k < solution.values.size() && static_cast<int>(states.size()) < max_states; ++k) {
        if (!(solution.values[k] < config.bound_threshold)) {
            break;
        }
        BoundState s;
        s.n = l + 1 + static_cast<int>(k);
        s.l = l;
        s.energy = solution.values[k];
        s.radii = grid->r();
        s.R = reconstruct_wavefunction(solution, k, *grid);
        s.config_used = config;
        states.push_back(std::move(s));
    }
    return states;
}

int agreed_decimal_places(double difference)
{
    double const d = std::abs(difference);
    int places = 0;
    double bound = 0.1;
    while (places < 16 && d < bound) {
        ++places;
        bound *= 0.1;
    }
    return places;
}

ConvergedEnergy converge_energy(PotentialSpec const& spec, int n, int l, SolverConfig const& base)
{
    check_state(n, l);
    base.validate();
    auto const k = static_cast<std::size_t>(n - l - 1);
    double const threshold = base.bound_threshold;
    int const target = base.stability_target_digits;
    double const tolerance = std::pow(10.0, -target);
    int const n_cap = std::max(n_escalation_cap, base.N);

    std::vector<double> boxes = {base.r_max};
    for (double r : r_max_ladder) {
        if (r > base.r_max) {
            boxes.push_back(r);
        }
    }

    LevelCache cache(spec, l, base.alpha);
    std::optional<ConvergedEnergy> best;

    for (double r_max : boxes) {
        int N = base.N;
        while (true) {
            auto const e0 = cache.bound_level(k, N, r_max, threshold);
            auto const e_n = cache.bound_level(k, N + n_probe_offset, r_max, threshold);
            if (!e0 && !e_n) {
                break; // not bound in this box
            }
            auto const e_r = cache.bound_level(k, N, r_max_probe_factor * r_max, threshold);

            constexpr double inf = std::numeric_limits<double>::infinity();
            double const spread_n = (e0 && e_n) ? std::abs(*e_n - *e0) : inf;
            double spread_r = (e0 && e_r) ? std::abs(*e_r - *e0) : inf;
            if (e0 && spread_r > tolerance && spread_n <= tolerance) {
                // The larger box at fixed N is coarser; give it one refinement before blaming r_max.
                auto const e_r_fine = cache.bound_level(k, N + n_escalation_step, r_max_probe_factor * r_max, threshold);
                if (e_r_fine) {
                    spread_r = std::min(spread_r, std::abs(*e_r_fine - *e0));
                }
            }
            int const digits = agreed_decimal_places(std::max(spread_n, spread_r));

            if (e0 && (!best || digits > best->stable_digits)) {
                SolverConfig used = base;
                used.N = N;
                used.r_max = r_max;
                best = ConvergedEnergy{*e0, std::min(digits, target), used};
            }
            if (best && best->stable_digits >= target) {
                return *best;
            }
            if (spread_n > tolerance && N + n_escalation_step <= n_cap) {
                N += n_escalation_step;
                continue;
            }
            break;
        }
    }

    if (best && best->stable_digits >= minimum_reportable_digits) {
        return *best;
    }
    throw NotConvergedError("state " + std::to_string(n) + spectroscopic_letter(std::min(l, 9)) + " of " +
                            to_string(spec) + " is not grid-stable (unbound or critically screened)");
}

BoundState converge_state(PotentialSpec const& spec, int n, int l, SolverConfig const& base)
{
    auto const converged = converge_energy(spec, n, l, base);
    auto const& config = converged.config_used;
    auto grid = std::make_shared<RadialGrid const>(build_grid(config.N, config.alpha, config.r_max));
    auto const solution = eig_symmetric(assemble(grid, spec, l).entries());
    auto const k = static_cast<std::size_t>(n - l - 1);

    BoundState s;
    s.n = n;
    s.l = l;
    s.energy = converged.energy;
    s.radii = grid->r();
    s.R = reconstruct_wavefunction(solution, k, *grid);
    s.stable_digits = converged.stable_digits;
    s.config_used = config;
    return s;
}

int count_bound_states(PotentialSpec const& spec, int l, SolverConfig const& config, int max_states)
{
    config.validate();
    auto const inner = level_energies(spec, l, config.N, config.alpha, config.r_max);
    auto const outer = level_energies(spec, l, config.N, config.alpha, r_max_probe_factor * config.r_max);
    int count = 0;
    for (std::size_t k = 0; k < inner.size() && k < outer.size() && count < max_states; ++k) {
        bool const bound = inner[k] < config.bound_threshold && outer[k] < config.bound_threshold;
        if (!bound || std::abs(inner[k] - outer[k]) >= continuum_shift_limit) {
            break;
        }
        ++count;
    }
    return count;
}

std::string truncate_decimal(double value, int digits)
{
    if (digits < 0) {
        throw DomainError("truncate_decimal: digits must be >= 0");
    }
    // 30 fractional digits are exact enough that cutting never meets a carry in practice.
    char buf[512];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 30);
    if (ec != std::errc{}) {
        throw DomainError("truncate_decimal: value not representable");
    }
    std::string text(buf, end);
    auto const dot = text.find('.');
    text.resize(digits == 0 ? dot : dot + 1 + static_cast<std::size_t>(digits));
    return text;
}

} // namespace gps
