#include "gps/golden.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gps/errors.hpp"

namespace gps {

namespace {

std::vector<std::string> split(std::string const& line, char sep)
{
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, sep)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        fields.emplace_back();
    }
    return fields;
}

} // namespace

std::string_view to_string(TableId id)
{
    constexpr std::string_view names[] = {"T1", "T2", "T3", "T4", "T5"};
    return names[static_cast<int>(id)];
}

TableId parse_table_id(std::string_view text)
{
    for (auto id : {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5}) {
        if (text == to_string(id)) {
            return id;
        }
    }
    throw ParseError("unknown table id '" + std::string(text) + "' (expected T1..T5)");
}

double GoldenEntry::energy() const
{
    return -std::stod(minus_energy);
}

int GoldenEntry::printed_decimals() const
{
    auto const dot = minus_energy.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(minus_energy.size() - dot - 1);
}

std::filesystem::path default_golden_path()
{
    return std::filesystem::path(GPS_DATA_DIR) / "golden.csv";
}

std::vector<GoldenEntry> load_golden(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open golden file '" + path.string() + "'");
    }
    std::vector<GoldenEntry> entries;
    std::string line;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto const fields = split(line, ',');
        if (!header_seen) {
            if (fields.size() < 5 || fields[0] != "table") {
                throw ParseError(path.string() + ": missing header row");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() < 5) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected 5 fields");
        }
        try {
            GoldenEntry e;
            e.table = parse_table_id(fields[0]);
            e.state = parse_state_label(fields[2]);
            e.param = fields[3];
            e.spec = parse_potential(fields[1] + ":" + (fields[1] == "gesc" ? "b=" : "delta=") + fields[3]);
            e.minus_energy = fields[4];
            double const magnitude = std::stod(e.minus_energy);
            if (!std::isfinite(magnitude) || magnitude <= 0.0) {
                throw ParseError("energy must be a finite positive magnitude");
            }
            entries.push_back(std::move(e));
        } catch (std::exception const& ex) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (entries.empty()) {
        throw ParseError("golden file '" + path.string() + "' has no entries");
    }
    return entries;
}

double golden_tolerance(GoldenEntry const& entry)
{
    if (entry.table == TableId::T1 && std::abs(entry.energy()) <= 1e-3) {
        return 1e-11;
    }
    return 1e-10;
}

GoldenComparison compare_entry(GoldenEntry const& entry, SolverConfig const& base)
{
    GoldenComparison c;
    c.entry = entry;
    try {
        auto const e = converge_energy(entry.spec, entry.state.n, entry.state.l, base);
        c.converged = true;
        c.computed = e.energy;
        c.stable_digits = e.stable_digits;
        c.config_used = e.config_used;
        c.computed_string = truncate_decimal(e.energy, e.stable_digits);
        c.abs_diff = std::abs(e.energy - entry.energy());
        c.matched_digits = std::min(agreed_decimal_places(c.abs_diff), entry.printed_decimals());
        c.passed = c.abs_diff <= golden_tolerance(entry);
    } catch (NotConvergedError const&) {
        c.converged = false;
    }
    return c;
}

} // namespace gps
