#pragma once

// Command-line surface and the CSV/JSON formats it emits.
//
// Numbers are written in the shortest decimal form that parses back to the
// same double. Missing values are empty CSV cells and JSON nulls.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scnewton/hamiltonian.hpp"
#include "scnewton/path_following.hpp"

namespace scnewton::cli_io {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3 };

/// Shortest round-trip representation; "" for NaN.
std::string format_number(double v);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Header row plus data rows, "\n"-terminated lines.
std::string to_string(const Csv& csv);

struct TableRow {
    double lambda_bar = 0.0;
    std::optional<double> bound_full;
    double bound_opt = 0.0;
    double gamma_star = 0.0;
    /// Non-empty when a row failed; the numeric cells are then NaN.
    std::string error;
};

/// Multiples of 0.02 and of 0.05 in [0.02, 0.98] (59 values).
std::vector<double> default_table_grid();

/// Rows for `grid` (each value in (0, 1)). The full-step column is left empty
/// above `full_step_max`; failures are recorded per row.
std::vector<TableRow> make_table(const std::vector<double>& grid, double full_step_max = 0.95);

Csv table_csv(const std::vector<TableRow>& rows);

Csv critical_curve_csv(std::size_t n, double c_lo, double c_hi);
Csv sigma_csv(double a);
Csv synthesis1d_csv(std::size_t n);

nlohmann::json to_json(const StepQuery& q, const BoundResult& r, bool trajectory);
nlohmann::json to_json(const path_following::TunerResult& r);
nlohmann::json to_json(const path_following::PathFollowRun& run);
nlohmann::json to_json(const path_following::Problem& p);
Csv log_csv(const path_following::PathFollowRun& run);

/// Entry point of the `scnewton` tool. Data goes to `out` (or the file given
/// by --out), diagnostics and machine-readable errors to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scnewton::cli_io
