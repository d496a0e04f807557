#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gps/potentials.hpp"
#include "gps/spectrum.hpp"

namespace gps {

enum class TableId
{
    T1,
    T2,
    T3,
    T4,
    T5
};

std::string_view to_string(TableId id);
TableId parse_table_id(std::string_view text);

/// One published reference energy.
struct GoldenEntry
{
    TableId table = TableId::T1;
    PotentialSpec spec;
    StateLabel state;
    /// Screening parameter (delta for ECSC, b for GESC) as written in the file.
    std::string param;
    /// -E exactly as printed, e.g. "0.44020051029".
    std::string minus_energy;

    double energy() const;
    /// Number of printed decimal places in minus_energy.
    int printed_decimals() const;
};

/// Path of the shipped reference file.
std::filesystem::path default_golden_path();

/// Reads `table,family,state,param,minus_energy` rows; '#' lines are comments.
/// Throws ParseError when the file is missing, empty or malformed.
std::vector<GoldenEntry> load_golden(std::filesystem::path const& path);

/// Absolute agreement required for an entry. T1 entries with |E| <= 1e-3 are
/// held to 1e-11; everything else to 1e-10 (ten decimal places).
double golden_tolerance(GoldenEntry const& entry);

struct GoldenComparison
{
    GoldenEntry entry;
    bool converged = false;
    double computed = 0.0;
    /// Computed energy truncated to its stable digits; empty if not converged.
    std::string computed_string;
    double abs_diff = 0.0;
    int matched_digits = 0;
    int stable_digits = 0;
    SolverConfig config_used;
    bool passed = false;
};

GoldenComparison compare_entry(GoldenEntry const& entry, SolverConfig const& base = {});

} // namespace gps
