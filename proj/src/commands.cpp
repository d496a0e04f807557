#include "gps/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "gps/critical.hpp"
#include "gps/errors.hpp"
#include "gps/golden.hpp"
#include "gps/potentials.hpp"
#include "gps/spectrum.hpp"

namespace gps {

namespace {

// Evaluates fn(0..count-1) on worker threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(count);
    std::size_t const workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, count ? count : 1);
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                slots[i].emplace(fn(i));
            }
        }));
    }
    for (auto& job : jobs) {
        job.get();
    }
    std::vector<Result> results;
    results.reserve(count);
    for (auto& slot : slots) {
        results.push_back(std::move(*slot));
    }
    return results;
}

std::string fixed(double value)
{
    char buf[128];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    return std::string(buf, end);
}

struct GridOptions
{
    int N = 200;
    double alpha = 25.0;
    double r_max = 300.0;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--N", N, "Collocation order");
        cmd->add_option("--alpha", alpha, "Map parameter alpha");
        cmd->add_option("--rmax", r_max, "Outer radius of the mapped box (a.u.)");
    }

    SolverConfig config() const
    {
        SolverConfig c;
        c.N = N;
        c.alpha = alpha;
        c.r_max = r_max;
        c.validate();
        return c;
    }
};

/// "7s,7p,8d" or "n=7,8" (every l < n for each listed n).
std::vector<StateLabel> parse_state_list(std::string const& text)
{
    std::vector<StateLabel> states;
    if (text.rfind("n=", 0) == 0) {
        std::stringstream stream(text.substr(2));
        std::string item;
        while (std::getline(stream, item, ',')) {
            int n = 0;
            auto const [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
            if (ec != std::errc{} || ptr != item.data() + item.size() || n < 1 || n > 10) {
                throw ParseError("malformed principal quantum number '" + item + "' in state list");
            }
            for (int l = 0; l < n; ++l) {
                states.push_back({n, l});
            }
        }
    } else {
        std::stringstream stream(text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            states.push_back(parse_state_label(item));
        }
    }
    if (states.empty()) {
        throw ParseError("empty state list");
    }
    return states;
}

std::string csv_params(PotentialSpec const& spec)
{
    auto text = parameter_string(spec);
    std::replace(text.begin(), text.end(), ',', ';');
    return text;
}

int cmd_solve(std::string const& pot, int n, int l, GridOptions const& grid, std::ostream& out)
{
    auto const spec = parse_potential(pot);
    auto const state = converge_state(spec, n, l, grid.config());
    out << "potential,params,n,l,energy,stable_digits,N,r_max\n";
    out << family_name(spec) << ',' << csv_params(spec) << ',' << n << ',' << l << ','
        << truncate_decimal(state.energy, state.stable_digits) << ',' << state.stable_digits << ','
        << state.config_used.N << ',' << fixed(state.config_used.r_max) << '\n';
    return exit_ok;
}

int cmd_scan(std::string const& pot, std::string const& state_list, double from, double to, int steps,
             std::string const& out_path, GridOptions const& grid, std::ostream& out)
{
    auto const base_spec = parse_potential(pot);
    (void)screening(base_spec);
    auto const states = parse_state_list(state_list);
    if (steps < 2) {
        throw ParseError("scan needs --steps >= 2");
    }
    if (!(from >= 0.0 && from <= 2.0 && to >= 0.0 && to <= 2.0)) {
        throw ParseError("scan range must lie within [0, 2]");
    }
    auto const config = grid.config();

    std::vector<double> params(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        params[static_cast<std::size_t>(i)] = (i == steps - 1) ? to : from + (to - from) * i / (steps - 1);
    }
    std::size_t const per_param = states.size();
    auto const energies = parallel_map(params.size() * per_param, [&](std::size_t idx) -> std::string {
        auto const spec = with_screening(base_spec, params[idx / per_param]);
        auto const& s = states[idx % per_param];
        try {
            auto const e = converge_energy(spec, s.n, s.l, config);
            return truncate_decimal(e.energy, e.stable_digits);
        } catch (NotConvergedError const&) {
            return {};
        }
    });

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            throw ParseError("cannot write '" + out_path + "'");
        }
        sink = &file;
    }
    *sink << "param,state,energy\n";
    for (std::size_t idx = 0; idx < energies.size(); ++idx) {
        *sink << fixed(params[idx / per_param]) << ',' << to_string(states[idx % per_param]) << ','
              << energies[idx] << '\n';
    }
    return exit_ok;
}

int cmd_table(std::string const& table, std::string const& golden_path, GridOptions const& grid,
              std::ostream& out)
{
    auto const id = parse_table_id(table);
    auto const config = grid.config();
    std::vector<GoldenEntry> entries;
    for (auto& e : load_golden(golden_path)) {
        if (e.table == id) {
            entries.push_back(std::move(e));
        }
    }
    if (entries.empty()) {
        throw ParseError("golden file has no entries for " + table);
    }
    auto const results = parallel_map(entries.size(), [&](std::size_t i) { return compare_entry(entries[i], config); });

    out << "state,param,golden,computed,abs_diff,matched_digits\n";
    double max_diff = 0.0;
    int min_matched = 99;
    bool all_passed = true;
    for (auto const& c : results) {
        out << to_string(c.entry.state) << ',' << c.entry.param << ",-" << c.entry.minus_energy << ',';
        if (c.converged) {
            out << c.computed_string << ',' << truncate_decimal(c.abs_diff, 15) << ',' << c.matched_digits << '\n';
            max_diff = std::max(max_diff, c.abs_diff);
        } else {
            out << ",,0\n";
        }
        min_matched = std::min(min_matched, c.converged ? c.matched_digits : 0);
        all_passed = all_passed && c.passed;
    }
    out << "summary,,,," << truncate_decimal(max_diff, 15) << ',' << min_matched << '\n';
    return all_passed ? exit_ok : exit_mismatch;
}

int cmd_critical(std::string const& pot, int n, int l, double tol, GridOptions const& grid, std::ostream& out)
{
    auto const family = parse_potential(pot);
    auto const result = find_critical_screening(family, n, l, tol, grid.config());
    int const decimals = std::max(1, static_cast<int>(std::ceil(-std::log10(tol))) + 2);
    out << "state,delta_c,bracket_width,energy_at_lower\n";
    out << to_string(result.state) << ',' << truncate_decimal(result.delta_c, decimals) << ','
        << truncate_decimal(result.bracket_width, decimals + 2) << ','
        << truncate_decimal(result.energy_at_lower, 12) << '\n';
    return exit_ok;
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bound states of screened Coulomb potentials by generalized pseudospectral collocation", "gps"};
    app.require_subcommand(1);

    GridOptions grid;

    std::string pot;
    int n = 1;
    int l = 0;
    auto* solve = app.add_subcommand("solve", "Grid-converged energy of one state");
    solve->add_option("--pot", pot, "Potential, e.g. ecsc:A=1,delta=0.06,g=1")->required();
    solve->add_option("--n", n, "Principal quantum number")->required();
    solve->add_option("--l", l, "Angular momentum")->required();
    grid.attach(solve);

    std::string states;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
    std::string out_path;
    auto* scan = app.add_subcommand("scan", "Energies over a screening-parameter range as CSV");
    scan->add_option("--pot", pot, "Potential family with fixed parameters, e.g. ecsc or gesc:a=1")->required();
    scan->add_option("--states", states, "State list: 7s,7p,... or n=7,8")->required();
    scan->add_option("--from", from, "First screening value")->required();
    scan->add_option("--to", to, "Last screening value")->required();
    scan->add_option("--steps", steps, "Number of screening values (>= 2)")->required();
    scan->add_option("--out", out_path, "Output file (default: stdout)");
    grid.attach(scan);

    std::string table;
    std::string golden = default_golden_path().string();
    auto* table_cmd = app.add_subcommand("table", "Compare computed energies with a reference table");
    table_cmd->add_option("table", table, "Table id T1..T5")->required();
    table_cmd->add_option("--golden", golden, "Reference CSV");
    grid.attach(table_cmd);

    double tol = 5e-4;
    std::string family = "ecsc";
    auto* critical = app.add_subcommand("critical", "Critical screening at which a state unbinds");
    critical->add_option("--n", n, "Principal quantum number")->required();
    critical->add_option("--l", l, "Angular momentum")->required();
    critical->add_option("--tol", tol, "Bracket width");
    critical->add_option("--pot", family, "Screened family, e.g. ecsc or ecsc:A=1,g=1");
    grid.attach(critical);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(pot, n, l, grid, out);
        }
        if (scan->parsed()) {
            return cmd_scan(pot, states, from, to, steps, out_path, grid, out);
        }
        if (table_cmd->parsed()) {
            return cmd_table(table, golden, grid, out);
        }
        if (critical->parsed()) {
            return cmd_critical(family, n, l, tol, grid, out);
        }
    } catch (NotConvergedError const& e) {
        err << "gps: " << e.what() << '\n';
        return exit_not_converged;
    } catch (ConvergenceError const& e) {
        err << "gps: " << e.what() << '\n';
        return exit_not_converged;
    } catch (std::exception const& e) {
        err << "gps: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace gps
