#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "scnewton/cli_io.hpp"

using namespace scnewton;
using namespace scnewton::cli_io;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "scnewton");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char ch = line[i];
            if (quoted) {
                if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else if (ch == '"') {
                    quoted = false;
                } else {
                    cell += ch;
                }
            } else if (ch == '"') {
                quoted = true;
            } else if (ch == ',') {
                cells.push_back(cell);
                cell.clear();
            } else {
                cell += ch;
            }
        }
        cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    REQUIRE(res.ec == std::errc());
    return v;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> ex(-300, 300);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double v = std::ldexp(mant(rng), ex(rng));
        CHECK(to_double(format_number(v)) == v);
    }
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(NAN) == "");
    CHECK(format_number(1.0) == "1");
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
    const Csv csv{{"h1", "h2"}, {{"1", "x,y"}}};
    CHECK(to_string(csv) == "h1,h2\n1,\"x,y\"\n");
    CHECK(parse_csv(to_string(csv))[1][1] == "x,y");
}

TEST_CASE("bound command") {
    const CliResult r = cli({"bound", "--a", "0.40", "--gamma", "1.0"});
    REQUIRE(r.code == kOk);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["lambda_out"].get<double>() - 0.1816461018) <= 1e-6);
    CHECK(j["regime"] == "FullDim");
    CHECK(j["shoot_residual"].get<double>() <= 1e-9);

    const json one = json::parse(cli({"bound", "--a", "0.5", "--gamma", "0.1"}).out);
    CHECK(one["regime"] == "OneDim");
    CHECK(std::abs(one["lambda_out"].get<double>() - 0.475) <= 1e-12);

    const CliResult bad = cli({"bound", "--a", "1.5", "--gamma", "1"});
    CHECK(bad.code == kUsage);
    CHECK(json::parse(bad.err)["error"] == "domain");
    CHECK(cli({"bound", "--gamma", "1"}).code == kUsage);
    CHECK(cli({"frobnicate"}).code == kUsage);
    CHECK(cli({}).code == kUsage);

    const json traj = json::parse(cli({"bound", "--a", "0.3", "--trajectory"}).out);
    CHECK(traj["trajectory"].size() >= 2);
}

TEST_CASE("table command") {
    SUBCASE("single row") {
        const auto rows = parse_csv(cli({"table", "--grid", "0.25"}).out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == std::vector<std::string>{"lambda_bar", "bound_full", "bound_opt", "gamma_star", "error"});
        CHECK(std::abs(to_double(rows[1][1]) - 0.0658302428) <= 1e-9);
        CHECK(std::abs(to_double(rows[1][2]) - 0.0649521741) <= 1e-9);
        CHECK(std::abs(to_double(rows[1][3]) - 0.9909114838) <= 1e-9);
    }
    SUBCASE("empty grid") {
        const CliResult r = cli({"table", "--grid", ""});
        CHECK(r.code == kOk);
        CHECK(r.out == "lambda_bar,bound_full,bound_opt,gamma_star,error\n");
    }
    SUBCASE("bad grid") {
        CHECK(cli({"table", "--grid", "0.2,abc"}).code == kUsage);
        CHECK(cli({"table", "--grid", "0.2,1.2"}).code == kUsage);
    }
    SUBCASE("default grid") {
        const auto rows = parse_csv(cli({"table"}).out);
        REQUIRE(rows.size() == refdata::kRows.size() + 1);
        for (std::size_t i = 0; i < refdata::kRows.size(); ++i) {
            const auto& ref = refdata::kRows[i];
            const auto& row = rows[i + 1];
            CHECK(to_double(row[0]) == doctest::Approx(ref.a).epsilon(1e-15));
            CHECK(std::abs(to_double(row[3]) - ref.gamma) <= 1e-6);
            CHECK(std::abs(to_double(row[2]) - ref.opt) <= 1e-6);
            if (std::isnan(ref.full))
                CHECK(row[1].empty());
            else
                CHECK(std::abs(to_double(row[1]) - ref.full) <= 1e-5);
            CHECK(row[4].empty());
        }
    }
    SUBCASE("json") {
        const json j = json::parse(cli({"table", "--grid", "0.5,0.97", "--format", "json"}).out);
        REQUIRE(j.size() == 2);
        CHECK(j[0]["bound_full"].is_number());
        CHECK(j[1]["bound_full"].is_null());
    }
}

TEST_CASE("curves command") {
    SUBCASE("critical") {
        const auto rows = parse_csv(cli({"curves", "critical"}).out);
        REQUIRE(rows.size() > 100);
        bool found = false;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (to_double(rows[i][0]) == -1.0) {
                found = true;
                CHECK(std::abs(to_double(rows[i][1]) - (1.0 - std::cbrt(4.0))) <= 1e-10);
                CHECK(to_double(rows[i][2]) == doctest::Approx(-1.0).epsilon(1e-12));
            }
        CHECK(found);
    }
    SUBCASE("sigma") {
        const auto rows = parse_csv(cli({"curves", "sigma", "--a", "0.4"}).out);
        REQUIRE(rows.size() > 3);
        CHECK(to_double(rows[1][0]) == -0.4);
        const double y1 = to_double(rows.back()[0]), y2 = to_double(rows.back()[1]);
        CHECK(std::abs(y1 * y1 + y1 + y2 * y2) <= 1e-10);
    }
    SUBCASE("bounds match table") {
        const auto bounds = parse_csv(cli({"curves", "bounds", "--step", "0.05"}).out);
        const auto table = parse_csv(cli({"table", "--grid", "0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5,0.55,0.6,0.65,0.7,0.75,0.8,0.85,0.9,0.95"}).out);
        REQUIRE(bounds.size() == table.size());
        CHECK(bounds[0] == table[0]);
        for (std::size_t i = 1; i < bounds.size(); ++i)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(to_double(bounds[i][k]) == doctest::Approx(to_double(table[i][k])).epsilon(1e-12));
    }
    SUBCASE("synthesis1d") {
        const auto rows = parse_csv(cli({"curves", "synthesis1d", "--n", "11"}).out);
        REQUIRE(rows.size() == 12);
        CHECK(to_double(rows[1][0]) == -1.0);
        CHECK(to_double(rows[1][2]) == 1.0);
    }
    CHECK(cli({"curves", "unknown"}).code == kUsage);
}

TEST_CASE("tune command") {
    const json full = json::parse(cli({"tune", "--policy", "full"}).out);
    CHECK(std::abs(full["lambda_star"].get<double>() - 0.394257) <= 1e-3);
    CHECK(std::abs(full["gap"].get<double>() - 0.2184159486) <= 1e-4);
    const json cl = json::parse(cli({"tune", "--policy", "classical-damped"}).out);
    CHECK(std::abs(cl["lambda_star"].get<double>() - 0.2910) <= 1e-3);
    CHECK(cli({"tune", "--policy", "fixed"}).code == kUsage);
}

TEST_CASE("solve command") {
    const std::vector<std::string> args{"solve", "--kind", "sdp", "--seed", "7", "--n", "8", "--m", "10", "--setup", "tight-optimal"};
    const CliResult a = cli(args), b = cli(args);
    REQUIRE(a.code == kOk);
    CHECK(a.out == b.out);
    const auto rows = parse_csv(a.out);
    CHECK(rows[0] == std::vector<std::string>{"k", "tau", "rho_before", "rho_after", "gamma_used"});
    CHECK(rows.size() > 10);

    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const json j = json::parse(cli(json_args).out);
    CHECK(j["reached_tau_max"] == true);
    CHECK(j["iterations"].get<std::size_t>() + 1 == rows.size());
    // full precision survives the CSV and JSON round trips
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(to_double(rows[i][1]) == j["log"][i - 1]["tau"].get<double>());
        CHECK(to_double(rows[i][3]) == j["log"][i - 1]["rho_after"].get<double>());
    }

    CHECK(cli({"solve", "--setup", "bogus"}).code == kUsage);
    CHECK(cli({"solve", "--kind", "lp", "--n", "50", "--m", "10"}).code == kUsage);

    const std::string path = "test_cli_io_problem.json";
    const std::string log_path = "test_cli_io_log.csv";
    const CliResult lp = cli({"solve", "--kind", "lp", "--seed", "3", "--n", "4", "--m", "9", "--setup", "tight-full",
                              "--problem-out", path, "--out", log_path});
    REQUIRE(lp.code == kOk);
    CHECK(lp.out.empty());
    std::ifstream pf(path), lf(log_path);
    const json prob = json::parse(pf);
    CHECK(prob["kind"] == "lp");
    CHECK(prob["seed"] == 3);
    CHECK(prob["A"].size() == 9);
    CHECK(prob["A"][0].size() == 4);
    const std::string log_text((std::istreambuf_iterator<char>(lf)), std::istreambuf_iterator<char>());
    CHECK(log_text.rfind("k,tau,", 0) == 0);
    std::remove(path.c_str());
    std::remove(log_path.c_str());
}
