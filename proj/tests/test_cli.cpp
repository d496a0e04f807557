#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gps/commands.hpp"
#include "gps/golden.hpp"
#include "gps/potentials.hpp"

using namespace gps;

namespace {

struct Run
{
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> const& args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> result;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        result.push_back(line);
    }
    return result;
}

std::vector<std::string> fields(std::string const& line)
{
    std::vector<std::string> result;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        result.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        result.emplace_back();
    }
    return result;
}

std::filesystem::path temp_file(std::string const& name, std::string const& content)
{
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

} // namespace

TEST(Solve, ScreenedGroundState)
{
    auto const r = run({"solve", "--pot", "ecsc:delta=0.1", "--n", "1", "--l", "0"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "potential,params,n,l,energy,stable_digits,N,r_max");
    auto const f = fields(rows[1]);
    ASSERT_EQ(f.size(), 8u);
    EXPECT_EQ(f[0], "ecsc");
    EXPECT_EQ(f[1], "A=1;delta=0.1;g=1");
    EXPECT_NEAR(std::stod(f[4]), -0.40088477464, 1e-10);
    EXPECT_EQ(f[5], "11");
    EXPECT_EQ(f[6], "200");
    EXPECT_EQ(f[7], "300");
}

TEST(Solve, SteepCoreEscalatesOrder)
{
    auto const r = run({"solve", "--pot", "gesc:b=20", "--n", "1", "--l", "0"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const f = fields(lines(r.out).at(1));
    EXPECT_NEAR(std::stod(f[4]), -0.50467744871, 1e-10);
    EXPECT_GT(std::stoi(f[6]), 200);
}

TEST(Solve, Hydrogen2p)
{
    auto const r = run({"solve", "--pot", "coulomb:Z=1", "--n", "2", "--l", "1"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const f = fields(lines(r.out).at(1));
    EXPECT_EQ(f[0], "coulomb");
    EXPECT_NEAR(std::stod(f[4]), -0.125, 1e-11);
}

TEST(Solve, GridOverridesAreHonoured)
{
    auto const r = run({"solve", "--pot", "coulomb", "--n", "1", "--l", "0", "--N", "120", "--rmax", "200"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const f = fields(lines(r.out).at(1));
    EXPECT_EQ(f[6], "120");
    EXPECT_EQ(f[7], "200");
}

TEST(Solve, ExitCodes)
{
    EXPECT_EQ(run({"solve", "--pot", "ecsc:zeta=1", "--n", "1", "--l", "0"}).code, exit_usage);
    EXPECT_EQ(run({"solve", "--pot", "morse", "--n", "1", "--l", "0"}).code, exit_usage);
    EXPECT_EQ(run({"solve", "--pot", "ecsc:delta=0.1", "--n", "1", "--l", "1"}).code, exit_usage);
    EXPECT_EQ(run({"solve", "--pot", "ecsc:delta=0.1", "--n", "one", "--l", "0"}).code, exit_usage);
    EXPECT_EQ(run({"solve", "--pot", "ecsc:delta=0.1", "--n", "1", "--l", "0", "--N", "5"}).code, exit_usage);

    auto const unbound = run({"solve", "--pot", "ecsc:delta=0.5", "--n", "2", "--l", "0"});
    EXPECT_EQ(unbound.code, exit_not_converged);
    EXPECT_NE(unbound.err.find("not grid-stable"), std::string::npos);
    EXPECT_TRUE(unbound.out.empty());
}

TEST(Cli, HelpAndMissingSubcommand)
{
    EXPECT_EQ(run({"--help"}).code, exit_ok);
    EXPECT_EQ(run({}).code, exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
}

TEST(Scan, TwoStepsEmitTwoRows)
{
    auto const r = run({"scan", "--pot", "ecsc", "--states", "2p", "--from", "0.01", "--to", "0.02", "--steps", "2"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "param,state,energy");
    EXPECT_EQ(fields(rows[1])[0], "0.01");
    EXPECT_EQ(fields(rows[2])[0], "0.02");
    EXPECT_EQ(fields(rows[1])[1], "2p");
    EXPECT_LT(std::stod(fields(rows[1])[2]), std::stod(fields(rows[2])[2]));
}

TEST(Scan, ShellListUnboundRowsAndDeterminism)
{
    std::vector<std::string> const args = {"scan", "--pot", "ecsc", "--states", "n=2", "--from", "0.1", "--to", "0.2",
                                           "--steps", "3"};
    auto const first = run(args);
    ASSERT_EQ(first.code, exit_ok) << first.err;
    auto const rows = lines(first.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[1].substr(0, 8), "0.1,2s,-");
    EXPECT_EQ(rows[2].substr(0, 8), "0.1,2p,-");
    // 2s unbinds near 0.167 and 2p near 0.148.
    EXPECT_EQ(rows[5], "0.2,2s,");
    EXPECT_EQ(rows[6], "0.2,2p,");
    EXPECT_EQ(run(args).out, first.out);
}

TEST(Scan, WritesFileWhenAsked)
{
    auto const path = std::filesystem::temp_directory_path() / "gps_scan_test.csv";
    std::filesystem::remove(path);
    auto const r = run({"scan", "--pot", "gesc:a=1", "--states", "1s", "--from", "0", "--to", "1", "--steps", "2",
                        "--out", path.string()});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    auto const rows = lines(content.str());
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(std::stod(fields(rows[1])[2]), -2.0, 1e-10);
    EXPECT_NEAR(std::stod(fields(rows[2])[2]), -1.19419978389, 1e-10);
    std::filesystem::remove(path);
}

TEST(Scan, RejectsBadInput)
{
    EXPECT_EQ(run({"scan", "--pot", "ecsc", "--states", "7q", "--from", "0", "--to", "1", "--steps", "2"}).code,
              exit_usage);
    EXPECT_EQ(run({"scan", "--pot", "ecsc", "--states", "n=x", "--from", "0", "--to", "1", "--steps", "2"}).code,
              exit_usage);
    EXPECT_EQ(run({"scan", "--pot", "ecsc", "--states", "1s", "--from", "0", "--to", "3", "--steps", "2"}).code,
              exit_usage);
    EXPECT_EQ(run({"scan", "--pot", "ecsc", "--states", "1s", "--from", "0", "--to", "1", "--steps", "1"}).code,
              exit_usage);
    EXPECT_EQ(run({"scan", "--pot", "coulomb", "--states", "1s", "--from", "0", "--to", "1", "--steps", "2"}).code,
              exit_usage);
}

TEST(Table, ReproducesNeighbourBlock)
{
    auto const r = run({"table", "T3"});
    ASSERT_EQ(r.code, exit_ok) << r.out;
    auto const rows = lines(r.out);
    ASSERT_EQ(rows.size(), 20u);
    EXPECT_EQ(rows[0], "state,param,golden,computed,abs_diff,matched_digits");
    EXPECT_EQ(rows.back().substr(0, 12), "summary,,,,0");
    int n8 = 0;
    int n10 = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        auto const f = fields(rows[i]);
        ASSERT_EQ(f.size(), 6u) << rows[i];
        n8 += f[1] == "0.005" ? 1 : 0;
        n10 += f[1] == "0.003" ? 1 : 0;
        EXPECT_GE(std::stoi(f[5]), 10) << rows[i];
    }
    EXPECT_EQ(n8, 8);
    EXPECT_EQ(n10, 10);
    EXPECT_NE(r.out.find("10m,0.003,-0.00208875461,"), std::string::npos);
}

TEST(Table, MismatchExitsOne)
{
    auto const path = temp_file("gps_golden_mismatch.csv",
                                "table,family,state,param,minus_energy\n"
                                "T2,ecsc,2p,0.01,0.11500965664\n"
                                "T2,ecsc,2p,0.02,0.10507463999\n");
    auto const r = run({"table", "T2", "--golden", path.string()});
    EXPECT_EQ(r.code, exit_mismatch);
    auto const rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_GE(std::stoi(fields(rows[1])[5]), 10);
    EXPECT_LT(std::stoi(fields(rows[2])[5]), 10);
    std::filesystem::remove(path);
}

TEST(Table, MissingOrEmptyGoldenIsUsageError)
{
    EXPECT_EQ(run({"table", "T1", "--golden", "/nonexistent/golden.csv"}).code, exit_usage);
    auto const empty = temp_file("gps_golden_empty.csv", "");
    EXPECT_EQ(run({"table", "T1", "--golden", empty.string()}).code, exit_usage);
    auto const header_only = temp_file("gps_golden_header.csv", "table,family,state,param,minus_energy\n");
    EXPECT_EQ(run({"table", "T1", "--golden", header_only.string()}).code, exit_usage);
    EXPECT_EQ(run({"table", "T9"}).code, exit_usage);
    std::filesystem::remove(empty);
    std::filesystem::remove(header_only);
}

TEST(Critical, GroundStateRow)
{
    auto const r = run({"critical", "--n", "1", "--l", "0", "--tol", "5e-3"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto const rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "state,delta_c,bracket_width,energy_at_lower");
    auto const f = fields(rows[1]);
    EXPECT_EQ(f[0], "1s");
    EXPECT_NEAR(std::stod(f[1]), 0.72, 5e-3);
    EXPECT_LE(std::stod(f[2]), 5e-3);
}

TEST(Critical, HighAngularMomentum)
{
    auto const r = run({"critical", "--n", "6", "--l", "5", "--tol", "5e-4"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NEAR(std::stod(fields(lines(r.out).at(1))[1]), 0.015455, 5e-4);
}

TEST(Critical, GescIsRejected)
{
    auto const r = run({"critical", "--n", "1", "--l", "0", "--pot", "gesc"});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("gesc"), std::string::npos);
}

TEST(Golden, PotentialStringsRoundTrip)
{
    auto const entries = load_golden(default_golden_path());
    EXPECT_EQ(entries.size(), 192u);
    for (auto const& e : entries) {
        auto const text = to_string(e.spec);
        auto const reparsed = parse_potential(text);
        EXPECT_EQ(reparsed, e.spec) << text;
        EXPECT_EQ(to_string(reparsed), text);
    }
}
